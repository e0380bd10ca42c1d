#include "wgmsim/matrix.hpp"

#include <cmath>

#include "wgmsim/kernels.hpp"

namespace wgmsim {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!square()) throw DimensionError("trace of a non-square matrix");
    cplx t(0.0, 0.0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_deviation() const {
    if (!square()) throw DimensionError("hermiticity check on a non-square matrix");
    double dev = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

void ComplexMatrix::hermitize() {
    if (!square()) throw DimensionError("hermitize on a non-square matrix");
    for (int i = 0; i < rows_; ++i) {
        (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
        for (int j = i + 1; j < cols_; ++j) {
            const cplx avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            (*this)(i, j) = avg;
            (*this)(j, i) = std::conj(avg);
        }
    }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in -");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix shape mismatch in *");
    if (!a.square() || !b.square()) {
        // Rectangular products are rare here; plain loops.
        ComplexMatrix c(a.rows(), b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int k = 0; k < a.cols(); ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0, 0.0)) continue;
                for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    ComplexMatrix c(a.rows(), b.cols());
    kern::active().matmul(a.data(), b.data(), c.data(), a.rows());
    return c;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx& v : amps_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix outer(const StateVector& psi) {
    const int n = psi.dim();
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const cplx vi = psi[i];
        for (int j = 0; j < n; ++j) m(i, j) = vi * std::conj(psi[j]);
    }
    return m;
}

StateVector apply(const ComplexMatrix& m, const StateVector& psi) {
    if (!m.square() || m.cols() != psi.dim())
        throw DimensionError("matrix/vector shape mismatch in apply");
    StateVector out(psi.dim());
    kern::active().matvec(m.data(), psi.data(), out.data(), psi.dim());
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

}  // namespace wgmsim
