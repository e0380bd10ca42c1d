#pragma once

#include <map>
#include <string>
#include <vector>

#include "wgmsim/matrix.hpp"
#include "wgmsim/model.hpp"

namespace wgmsim {

// Uniform time grid in tau = g*t. `steps` intervals, steps+1 stored points.
struct TimeGrid {
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;

    void validate() const;
    int points() const { return steps + 1; }
    double dt() const { return (stop - start) / steps; }
    double time_at(int k) const { return start + dt() * k; }
};

// Stored evolution. Closed runs fill `pure`, dissipative runs fill
// `density`; named scalar series (trace, min eigenvalue, ...) ride along.
struct Trajectory {
    TimeGrid grid;
    std::vector<StateVector> pure;
    std::vector<ComplexMatrix> density;
    std::map<std::string, std::vector<double>> scalars;

    bool is_pure() const { return !pure.empty(); }
    int points() const { return is_pure() ? static_cast<int>(pure.size())
                                          : static_cast<int>(density.size()); }
    ComplexMatrix density_at(int k) const;
};

// |psi(tau)> = exp(-i H tau) |psi0> via one Hermitian eigendecomposition.
// Norm is checked to 1e-10 at every stored point.
Trajectory evolve_closed(const ComplexMatrix& h, const StateVector& psi0, const TimeGrid& grid);

// -i[H,rho] + sum_c rate_c (2 L rho L^dag - L^dag L rho - rho L^dag L)
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const std::vector<CollapseChannel>& channels);

struct MasterOptions {
    // Internal substeps keep dt * (|H|_max + dissipative scale) <= budget.
    double step_budget = 0.025;
};

// Classic fourth-order fixed-step integration of the master equation with
// internal substepping. Stored states are re-symmetrized and guarded:
// |trace - 1| <= 1e-8 and min eigenvalue > -1e-7, else GuardError.
Trajectory evolve_master(const ComplexMatrix& rho0, const ComplexMatrix& h,
                         const std::vector<CollapseChannel>& channels, const TimeGrid& grid,
                         const MasterOptions& options = {});

// Single-excitation amplitudes of the two-emitter symmetric-coupling
// system, evaluated with complex square root and cosh/sinh so the always
// negative discriminant needs no case split.
struct AnalyticAmplitudes {
    cplx c1, c2, c3;
    double alpha;   // cos(theta) + sin(theta)
    double d_disc;  // 2 J Omega - J^2 - (16 + Omega^2), g = 1
};

// Initial state cos(theta)|eg> + sin(theta)|ge>, empty modes.
AnalyticAmplitudes analytic_amplitudes(double theta, double omega_over_g, double j_over_g,
                                       double tau);

double discriminant(double omega_over_g, double j_over_g);

// The amplitudes as a 16-dimensional state over make_layout(2,1).
// The amplitude formulas are written with the opposite time-evolution sign
// and with mode B coupled through a real (phase-absorbed) constant, so this
// mapping conjugates them and carries the B one-photon ket with a -i phase;
// the result can then be compared elementwise against evolve_closed.
StateVector analytic_state(const AnalyticAmplitudes& amps);

}  // namespace wgmsim
