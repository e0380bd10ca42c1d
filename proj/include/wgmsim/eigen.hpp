#pragma once

#include <vector>

#include "wgmsim/matrix.hpp"

namespace wgmsim {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns, unitary
};

// All real eigenvalues of a Hermitian matrix, ascending. The input is
// symmetrized before solving; deviation from Hermiticity beyond 1e-10
// is an error. Cyclic complex Jacobi; convergence when the largest
// off-diagonal magnitude drops below 1e-12 times the Frobenius norm.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m);

}  // namespace wgmsim
