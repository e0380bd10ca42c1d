#include "wgmsim/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wgmsim/kernels.hpp"

namespace wgmsim {

namespace {

constexpr double k_hermiticity_tol = 1e-10;
constexpr double k_convergence_tol = 1e-12;  // relative to Frobenius norm
constexpr int k_max_sweeps = 60;

double max_offdiag(const ComplexMatrix& a) {
    double m = 0.0;
    for (int p = 0; p < a.rows(); ++p)
        for (int q = p + 1; q < a.cols(); ++q) m = std::max(m, std::abs(a(p, q)));
    return m;
}

// Cyclic Jacobi on a Hermitian matrix. Rows are rotated with the SIMD pair
// kernel and the columns are restored from Hermiticity, which keeps the
// iterate exactly Hermitian. W accumulates V^dagger row-wise so the same
// kernel applies; V is recovered at the end.
void jacobi(ComplexMatrix a, bool want_vectors, std::vector<double>& values,
            ComplexMatrix& vectors) {
    const int n = a.rows();
    const double fro = a.frobenius();
    ComplexMatrix w = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();

    if (fro > 0.0) {
        const double stop = k_convergence_tol * fro;
        const double skip = stop * 1e-2;
        const auto& kern = kern::active();
        int sweep = 0;
        for (; sweep < k_max_sweeps; ++sweep) {
            if (max_offdiag(a) <= stop) break;
            for (int p = 0; p < n; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const cplx b = a(p, q);
                    const double ab = std::abs(b);
                    if (ab <= skip) continue;

                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    const double tau = (app - aqq) / (2.0 * ab);
                    const double t =
                        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const cplx phase = b / ab;
                    const cplx s_c = -s * phase;

                    kern.rotate_pair(c, s_c, a.data() + static_cast<long>(p) * n,
                                     a.data() + static_cast<long>(q) * n, n);
                    // 2x2 block analytically, from the pre-rotation values
                    const double app_new = app * c * c + 2.0 * ab * s * c + aqq * s * s;
                    const double aqq_new = app * s * s - 2.0 * ab * s * c + aqq * c * c;
                    for (int i = 0; i < n; ++i) {
                        a(i, p) = std::conj(a(p, i));
                        a(i, q) = std::conj(a(q, i));
                    }
                    a(p, p) = app_new;
                    a(q, q) = aqq_new;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;

                    if (want_vectors)
                        kern.rotate_pair(c, s_c, w.data() + static_cast<long>(p) * n,
                                         w.data() + static_cast<long>(q) * n, n);
                }
            }
        }
        if (sweep == k_max_sweeps && max_offdiag(a) > stop)
            throw GuardError("Jacobi eigensolver failed to converge");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    values.resize(n);
    for (int i = 0; i < n; ++i) values[i] = a(order[i], order[i]).real();

    if (want_vectors) {
        vectors = ComplexMatrix(n, n);
        for (int col = 0; col < n; ++col) {
            const int src_row = order[col];
            for (int i = 0; i < n; ++i) vectors(i, col) = std::conj(w(src_row, i));
        }
    }
}

ComplexMatrix checked_symmetrized(const ComplexMatrix& m) {
    if (!m.square()) throw DimensionError("eigensolver requires a square matrix");
    if (m.hermiticity_deviation() > k_hermiticity_tol)
        throw GuardError("matrix is not Hermitian within tolerance");
    ComplexMatrix a = m;
    a.hermitize();
    return a;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    std::vector<double> values;
    ComplexMatrix dummy;
    jacobi(checked_symmetrized(m), false, values, dummy);
    return values;
}

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m) {
    EigenDecomposition out;
    jacobi(checked_symmetrized(m), true, out.values, out.vectors);
    return out;
}

}  // namespace wgmsim
