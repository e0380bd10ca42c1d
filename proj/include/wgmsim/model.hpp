#pragma once

#include <utility>
#include <vector>

#include "wgmsim/hilbert.hpp"
#include "wgmsim/matrix.hpp"

namespace wgmsim {

// Physical rates and geometry of one simulation instance. Units: hbar = 1
// and the reference emitter-mode coupling g = 1 set the scale; every rate
// below is in units of g and the time axis is tau = g*t.
struct SystemParams {
    int atom_count = 2;
    double delta = 0.0;      // emitter-mode detuning
    double scatter_j = 0.0;  // inter-mode backscattering J
    // Per-atom couplings (g_A, g_B) to the symmetric/antisymmetric modes.
    std::vector<std::pair<double, double>> couplings;
    // Pairwise dipole-dipole rates, atom_count x atom_count, row major,
    // symmetric with zero diagonal.
    std::vector<double> ddi;
    double kappa = 0.0;  // cavity decay
    double gamma = 0.0;  // spontaneous emission
    int photon_cutoff = 1;

    double ddi_at(int i, int j) const { return ddi[i * atom_count + j]; }
    void set_uniform_ddi(double omega);
    void validate() const;
};

DimensionLayout layout_for(const SystemParams& params);

// (g_A, g_B) = g_eff * (cos kx, sin kx) for an emitter at azimuthal phase kx.
std::pair<double, double> coupling_from_position(double g_eff, double kx);

// Dipole-dipole rate (3/4) * gamma * c^3 / (omega_a^3 d^3) * (1 - 3 cos^2 theta).
double dipole_strength(double gamma, double omega_a, double c_light, double d, double theta_d);

// Interaction-picture Hamiltonian over the given layout:
//   (delta+J) A^dag A + (delta-J) B^dag B
//   + sum_{i<j} ddi_ij (sp_i sm_j + sp_j sm_i)
//   + sum_j [ gA_j (A^dag sm_j + A sp_j) - i gB_j (B^dag sm_j - B sp_j) ]
ComplexMatrix build_hamiltonian(const SystemParams& params, const DimensionLayout& layout);

struct CollapseChannel {
    double rate;
    ComplexMatrix op;
};

// Channels in the order mode A, mode B (rate kappa), then one per atom
// (rate gamma/2, operator sm_i). Downstream the dissipator is
// rate * (2 L rho L^dag - L^dag L rho - rho L^dag L): an excited-atom
// population decays at gamma and a photon population at 2*kappa.
std::vector<CollapseChannel> build_collapse_channels(const SystemParams& params,
                                                     const DimensionLayout& layout);

// sum_j sp_j sm_j + A^dag A + B^dag B
ComplexMatrix excitation_operator(const DimensionLayout& layout);

// Occupation of the highest retained Fock level of each mode; used as the
// truncation-leakage guard on trajectories.
double top_fock_population(const StateVector& psi, const DimensionLayout& layout);
double top_fock_population(const ComplexMatrix& rho, const DimensionLayout& layout);

}  // namespace wgmsim
