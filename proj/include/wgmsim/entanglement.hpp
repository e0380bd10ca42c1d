#pragma once

#include <vector>

#include "wgmsim/hilbert.hpp"
#include "wgmsim/matrix.hpp"

namespace wgmsim {

// Elements of the two-emitter density matrix in the {ee, eg, ge, gg} basis
// when only the diagonal and the inner coherence survive.
struct XStateElements {
    double a_pop = 0.0;  // <ee|rho|ee>
    double b_pop = 0.0;  // <eg|rho|eg>
    double c_pop = 0.0;  // <ge|rho|ge>
    double d_pop = 0.0;  // <gg|rho|gg>
    cplx e_coh;          // <ge|rho|eg>

    void validate() const;
};

XStateElements xstate_from_density(const ComplexMatrix& rho_atoms);

struct PartitionSpec {
    std::vector<int> side_one;
    std::vector<int> side_two;

    void validate(const DimensionLayout& layout) const;
};

// -2 times the sum of the strictly negative eigenvalues of the partial
// transpose over side_two. Eigenvalues above -1e-12 count as zero so
// solver noise cannot fabricate entanglement.
double negativity(const ComplexMatrix& rho, const DimensionLayout& layout,
                  const PartitionSpec& partition);

// max(0, sqrt((D-A)^2 + 4|E|^2) - D - A); the only possibly negative
// partial-transpose eigenvalue of an X state, doubled.
double xstate_negativity(const XStateElements& x);

// Closed-form negativity of the theta = pi/4 two-emitter symmetric system
// as a function of the dipole rate, the backscattering rate and tau.
// Derived from the single-excitation amplitude solution; exact for J = 0
// (see README notes on its validity domain).
double closed_form_negativity(double omega_over_g, double j_over_g, double tau);

// Geometric mean of the three one-vs-rest negativities of a three-emitter
// density matrix; zero when any factor vanishes.
double tripartite_negativity(const ComplexMatrix& rho_atoms);

}  // namespace wgmsim
