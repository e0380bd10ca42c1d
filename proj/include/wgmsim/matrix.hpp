#pragma once

#include <complex>
#include <vector>

#include "wgmsim/errors.hpp"

namespace wgmsim {

using cplx = std::complex<double>;

// Dense complex matrix, row major. Carries operators, density matrices and
// unitaries; dimensions in this project stay small (a few dozen), so
// everything is dense and value-semantic.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    }

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    double frobenius() const;

    // max_ij |m(i,j) - conj(m(j,i))|
    double hermiticity_deviation() const;
    // In-place (m + m^dagger)/2.
    void hermitize();

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(int dim) : amps_(static_cast<size_t>(dim)) {
        if (dim < 0) throw DimensionError("negative state dimension");
    }

    int dim() const { return static_cast<int>(amps_.size()); }
    cplx& operator[](int i) { return amps_[static_cast<size_t>(i)]; }
    const cplx& operator[](int i) const { return amps_[static_cast<size_t>(i)]; }
    cplx* data() { return amps_.data(); }
    const cplx* data() const { return amps_.data(); }

    double norm() const;

  private:
    std::vector<cplx> amps_;
};

// |psi><psi|
ComplexMatrix outer(const StateVector& psi);

// m * psi
StateVector apply(const ComplexMatrix& m, const StateVector& psi);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace wgmsim
