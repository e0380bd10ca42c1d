#include "wgmsim/kernels.hpp"

namespace wgmsim::kern {

namespace {

void matmul_scalar(const cplx* a, const cplx* b, cplx* c, int n) {
    for (int i = 0; i < n; ++i) {
        cplx* crow = c + static_cast<long>(i) * n;
        for (int j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
        const cplx* arow = a + static_cast<long>(i) * n;
        for (int k = 0; k < n; ++k) {
            const cplx aik = arow[k];
            if (aik == cplx(0.0, 0.0)) continue;
            const cplx* brow = b + static_cast<long>(k) * n;
            for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void matvec_scalar(const cplx* a, const cplx* x, cplx* y, int n) {
    for (int i = 0; i < n; ++i) {
        const cplx* arow = a + static_cast<long>(i) * n;
        cplx acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) acc += arow[j] * x[j];
        y[i] = acc;
    }
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, int n) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rotate_pair_scalar(double c, cplx s, cplx* x, cplx* y, int n) {
    const cplx sc = std::conj(s);
    for (int i = 0; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = sc * xi + c * yi;
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", matmul_scalar, matvec_scalar, axpy_scalar,
                           rotate_pair_scalar};
    return k;
}

}  // namespace wgmsim::kern
