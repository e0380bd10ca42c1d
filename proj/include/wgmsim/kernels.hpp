#pragma once

#include <complex>

// Low-level dense complex kernels. Everything above this layer (matrices,
// eigensolver, integrators) funnels its arithmetic through these function
// pointers. Two backends are provided: a portable scalar reference and an
// AVX2+FMA variant selected at run time when the CPU supports it. Both must
// agree to rounding accuracy; tests/test_kernels.cpp enforces the
// equivalence on random inputs.

namespace wgmsim::kern {

using cplx = std::complex<double>;

struct Kernels {
    const char* name;
    // c = a * b, square n x n, row major. c must not alias a or b.
    void (*matmul)(const cplx* a, const cplx* b, cplx* c, int n);
    // y = a * x for square a. y must not alias a or x.
    void (*matvec)(const cplx* a, const cplx* x, cplx* y, int n);
    // y += alpha * x over n entries.
    void (*axpy)(cplx alpha, const cplx* x, cplx* y, int n);
    // Two-row unitary rotation used by the Jacobi eigensolver:
    //   x' = c*x - s*y,  y' = conj(s)*x + c*y   (c real, c^2 + |s|^2 = 1)
    void (*rotate_pair)(double c, cplx s, cplx* x, cplx* y, int n);
};

const Kernels& scalar_kernels();

// Null when the binary or the CPU lacks AVX2/FMA.
const Kernels* avx2_kernels();

// Active backend. Defaults to the best supported one; the WGMSIM_KERNELS
// environment variable ("scalar" or "avx2") overrides at startup.
const Kernels& active();

// Programmatic override, mainly for the equivalence tests.
// Accepts "scalar", "avx2" or "auto". Throws if unavailable.
void select(const char* name);

}  // namespace wgmsim::kern
