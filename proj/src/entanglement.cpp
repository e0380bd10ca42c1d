#include "wgmsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "wgmsim/eigen.hpp"

namespace wgmsim {

namespace {

constexpr double k_eigen_clamp = 1e-12;

void check_density(const ComplexMatrix& rho, int dim) {
    if (!rho.square() || rho.rows() != dim)
        throw DimensionError("density matrix does not match layout");
    if (rho.hermiticity_deviation() > 1e-8)
        throw GuardError("density matrix is not Hermitian");
    const cplx tr = rho.trace();
    if (std::abs(tr - cplx(1.0, 0.0)) > 1e-6)
        throw GuardError("density matrix trace is not one");
}

}  // namespace

void XStateElements::validate() const {
    const double pops[4] = {a_pop, b_pop, c_pop, d_pop};
    for (double p : pops)
        if (p < -1e-12) throw GuardError("X-state population is negative");
    if (std::abs(a_pop + b_pop + c_pop + d_pop - 1.0) > 1e-9)
        throw GuardError("X-state populations do not sum to one");
    if (std::norm(e_coh) > b_pop * c_pop + 1e-12)
        throw GuardError("X-state coherence exceeds the population bound");
}

XStateElements xstate_from_density(const ComplexMatrix& rho_atoms) {
    check_density(rho_atoms, 4);
    XStateElements x;
    x.a_pop = rho_atoms(0, 0).real();
    x.b_pop = rho_atoms(1, 1).real();
    x.c_pop = rho_atoms(2, 2).real();
    x.d_pop = rho_atoms(3, 3).real();
    x.e_coh = rho_atoms(2, 1);
    return x;
}

void PartitionSpec::validate(const DimensionLayout& layout) const {
    if (side_one.empty() || side_two.empty())
        throw DimensionError("both partition sides must be non-empty");
    std::vector<bool> seen(layout.subsystems(), false);
    for (const auto* side : {&side_one, &side_two})
        for (int s : *side) {
            if (s < 0 || s >= layout.subsystems())
                throw DimensionError("partition index out of range");
            if (seen[s]) throw DimensionError("partition sides overlap");
            seen[s] = true;
        }
    for (bool b : seen)
        if (!b) throw DimensionError("partition does not cover all subsystems");
}

double negativity(const ComplexMatrix& rho, const DimensionLayout& layout,
                  const PartitionSpec& partition) {
    partition.validate(layout);
    check_density(rho, layout.total());

    const ComplexMatrix pt = partial_transpose(rho, layout, partition.side_two);
    const std::vector<double> eigs = hermitian_eigenvalues(pt);
    double sum_neg = 0.0;
    for (double v : eigs)
        if (v < -k_eigen_clamp) sum_neg += v;
    return -2.0 * sum_neg;
}

double xstate_negativity(const XStateElements& x) {
    x.validate();
    const double a = x.a_pop, d = x.d_pop;
    const double root = std::sqrt((d - a) * (d - a) + 4.0 * std::norm(x.e_coh));
    return std::max(0.0, root - d - a);
}

double closed_form_negativity(double omega_over_g, double j_over_g, double tau) {
    const double om = omega_over_g, j = j_over_g;
    const double disc = 2.0 * j * om - j * j - (16.0 + om * om);  // always <= -16

    const cplx root = std::sqrt(cplx(disc, 0.0));
    const cplx ch = std::cosh(root * (tau / 2.0));
    const cplx sh = std::sinh(root * (tau / 2.0));
    const double ch2 = (ch * ch).real();
    const double sh2 = (sh * sh).real();

    const double first =
        (2.0 / std::abs(disc)) *
        std::sqrt(0.25 * std::pow(disc * ch2 + (j - om) * (j - om) * sh2, 2) +
                  4.0 * std::pow(4.0 * sh2, 2));
    const double second = (4.0 / disc) * (4.0 * sh2);
    const double n = first - second;
    return std::clamp(n, 0.0, 1.0 + 1e-9);
}

double tripartite_negativity(const ComplexMatrix& rho_atoms) {
    check_density(rho_atoms, 8);
    const DimensionLayout layout({2, 2, 2}, 3);
    double product = 1.0;
    for (int atom = 0; atom < 3; ++atom) {
        PartitionSpec split;
        split.side_one = {atom};
        for (int s = 0; s < 3; ++s)
            if (s != atom) split.side_two.push_back(s);
        const double n = negativity(rho_atoms, layout, split);
        if (n <= 0.0) return 0.0;
        product *= n;
    }
    return std::cbrt(product);
}

}  // namespace wgmsim
