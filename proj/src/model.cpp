#include "wgmsim/model.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace wgmsim {

void SystemParams::set_uniform_ddi(double omega) {
    ddi.assign(static_cast<size_t>(atom_count) * atom_count, omega);
    for (int i = 0; i < atom_count; ++i) ddi[i * atom_count + i] = 0.0;
}

void SystemParams::validate() const {
    if (atom_count < 1 || atom_count > 3)
        throw ConfigError("atom_count must be 1, 2 or 3");
    if (static_cast<int>(couplings.size()) != atom_count)
        throw ConfigError("couplings list length must equal atom_count");
    if (static_cast<int>(ddi.size()) != atom_count * atom_count)
        throw ConfigError("ddi matrix must be atom_count x atom_count");
    for (int i = 0; i < atom_count; ++i) {
        if (ddi_at(i, i) != 0.0) throw ConfigError("ddi diagonal must be zero");
        for (int j = 0; j < atom_count; ++j)
            if (ddi_at(i, j) != ddi_at(j, i)) throw ConfigError("ddi matrix must be symmetric");
    }
    if (kappa < 0.0 || gamma < 0.0) throw ConfigError("decay rates must be non-negative");
    if (photon_cutoff < 1) throw ConfigError("photon_cutoff must be at least 1");
}

DimensionLayout layout_for(const SystemParams& params) {
    return make_layout(params.atom_count, params.photon_cutoff);
}

std::pair<double, double> coupling_from_position(double g_eff, double kx) {
    return {g_eff * std::cos(kx), g_eff * std::sin(kx)};
}

double dipole_strength(double gamma, double omega_a, double c_light, double d, double theta_d) {
    if (d <= 0.0) throw ConfigError("dipole separation must be positive");
    if (omega_a <= 0.0) throw ConfigError("transition frequency must be positive");
    const double ct = std::cos(theta_d);
    return 0.75 * gamma * std::pow(c_light / omega_a, 3) / std::pow(d, 3) * (1.0 - 3.0 * ct * ct);
}

namespace {

void check_layout(const SystemParams& params, const DimensionLayout& layout) {
    params.validate();
    const DimensionLayout expect = layout_for(params);
    if (layout.dims != expect.dims || layout.atoms != expect.atoms)
        throw DimensionError("layout does not match system parameters");
}

}  // namespace

ComplexMatrix build_hamiltonian(const SystemParams& params, const DimensionLayout& layout) {
    check_layout(params, layout);
    const int n = layout.total();
    const int mode_a = params.atom_count;
    const int mode_b = params.atom_count + 1;

    const ComplexMatrix a = subsystem_operator(OperatorKind::annihilate, mode_a, layout);
    const ComplexMatrix b = subsystem_operator(OperatorKind::annihilate, mode_b, layout);
    const ComplexMatrix ad = a.adjoint();
    const ComplexMatrix bd = b.adjoint();

    ComplexMatrix h(n, n);
    h += cplx(params.delta + params.scatter_j) * (ad * a);
    h += cplx(params.delta - params.scatter_j) * (bd * b);

    std::vector<ComplexMatrix> sm, sp;
    for (int i = 0; i < params.atom_count; ++i) {
        sm.push_back(subsystem_operator(OperatorKind::lower, i, layout));
        sp.push_back(sm.back().adjoint());
    }

    for (int i = 0; i < params.atom_count; ++i)
        for (int j = i + 1; j < params.atom_count; ++j) {
            const double om = params.ddi_at(i, j);
            if (om != 0.0) h += cplx(om) * (sp[i] * sm[j] + sp[j] * sm[i]);
        }

    for (int j = 0; j < params.atom_count; ++j) {
        const auto [g_a, g_b] = params.couplings[j];
        if (g_a != 0.0) h += cplx(g_a) * (ad * sm[j] + a * sp[j]);
        if (g_b != 0.0) h += cplx(0.0, -g_b) * (bd * sm[j] - b * sp[j]);
    }
    return h;
}

std::vector<CollapseChannel> build_collapse_channels(const SystemParams& params,
                                                     const DimensionLayout& layout) {
    check_layout(params, layout);
    std::vector<CollapseChannel> channels;
    channels.push_back(
        {params.kappa, subsystem_operator(OperatorKind::annihilate, params.atom_count, layout)});
    channels.push_back(
        {params.kappa, subsystem_operator(OperatorKind::annihilate, params.atom_count + 1, layout)});
    for (int i = 0; i < params.atom_count; ++i)
        channels.push_back({0.5 * params.gamma, subsystem_operator(OperatorKind::lower, i, layout)});
    return channels;
}

ComplexMatrix excitation_operator(const DimensionLayout& layout) {
    const int n = layout.total();
    ComplexMatrix out(n, n);
    for (int s = 0; s < layout.subsystems(); ++s) {
        if (layout.is_atom(s)) {
            const ComplexMatrix sm = subsystem_operator(OperatorKind::lower, s, layout);
            out += sm.adjoint() * sm;
        } else {
            out += subsystem_operator(OperatorKind::number, s, layout);
        }
    }
    return out;
}

namespace {

// Sums diag weights over basis states whose mode digit sits at the cutoff.
double top_population(const DimensionLayout& layout,
                      const std::function<double(int)>& weight) {
    double total = 0.0;
    const int n = layout.total();
    for (int s = 0; s < layout.subsystems(); ++s) {
        if (layout.is_atom(s)) continue;
        const int d = layout.dims[s];
        const int stride = layout.stride(s);
        double pop = 0.0;
        for (int f = 0; f < n; ++f)
            if ((f / stride) % d == d - 1) pop += weight(f);
        total = std::max(total, pop);
    }
    return total;
}

}  // namespace

double top_fock_population(const StateVector& psi, const DimensionLayout& layout) {
    if (psi.dim() != layout.total()) throw DimensionError("state does not match layout");
    return top_population(layout, [&](int f) { return std::norm(psi[f]); });
}

double top_fock_population(const ComplexMatrix& rho, const DimensionLayout& layout) {
    if (!rho.square() || rho.rows() != layout.total())
        throw DimensionError("density matrix does not match layout");
    return top_population(layout, [&](int f) { return rho(f, f).real(); });
}

}  // namespace wgmsim
