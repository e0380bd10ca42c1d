#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wgmsim/dynamics.hpp"
#include "wgmsim/entanglement.hpp"
#include "wgmsim/table.hpp"

namespace wgmsim {

enum class InitialStateKind { superposition, w_state, product_three, custom };

struct InitialState {
    InitialStateKind kind = InitialStateKind::superposition;
    // cos(theta)|eg> + sin(theta)|ge>, modes in vacuum (superposition kind).
    double theta = 0.0;
    // Arbitrary initial density matrix; reachable through the library only.
    ComplexMatrix custom;
};

enum class Measure { negativity, tripartite_negativity, max_negativity_over_window };

enum class VaryParam { omega, scatter_j, g2, theta };

struct VarySpec {
    VaryParam param = VaryParam::omega;
    double min = 0.0;
    double max = 0.0;
    int samples = 1;
};

// Declarative description of one experiment: base parameters, initial
// state, time grid, at most one varied parameter and the measured series.
struct SweepSpec {
    SystemParams base;
    InitialState initial_state;
    TimeGrid grid;
    std::optional<VarySpec> vary;
    Measure measure = Measure::negativity;
    // (omega, scatter_j) pairs for paired theta scans; empty otherwise.
    std::vector<std::pair<double, double>> scan_pairs;

    void validate() const;
};

std::string measure_name(Measure m);
std::string vary_name(VaryParam p);

// Columns [tau, <measure>, trace, min_eigenvalue]. Closed solver when
// kappa = gamma = 0 and the initial state is pure, master solver otherwise.
ResultTable run_time_sweep(const SweepSpec& spec);

// Long format [<vary>, tau, <measure>] over a linspace of the varied
// parameter. Grid points are evaluated in parallel and merged in order.
ResultTable run_grid_sweep(const SweepSpec& spec);

// Maximal negativity over the sampled window per theta sample (and per
// (omega, scatter_j) pair when scan_pairs is set). Columns
// [theta, omega, scatter_j, max_negativity].
ResultTable max_negativity_scan(const SweepSpec& spec, const TimeGrid& window);

// Initial pure state per the spec's kind over the given layout.
StateVector make_initial_state(const InitialState& init, const SystemParams& params,
                               const DimensionLayout& layout);

// Measured series along a trajectory (reduced to the emitters first).
// Also enforces the Fock-truncation leakage guard at every point.
std::vector<double> measure_series(const Trajectory& traj, const SystemParams& params,
                                   Measure measure);

}  // namespace wgmsim
