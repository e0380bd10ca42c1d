#include "wgmsim/dynamics.hpp"

#include <cmath>

#include "wgmsim/eigen.hpp"
#include "wgmsim/kernels.hpp"

namespace wgmsim {

void TimeGrid::validate() const {
    if (!(stop > start)) throw ConfigError("time grid requires stop > start");
    if (steps < 1) throw ConfigError("time grid requires at least one step");
}

ComplexMatrix Trajectory::density_at(int k) const {
    if (is_pure()) return outer(pure[k]);
    return density[k];
}

Trajectory evolve_closed(const ComplexMatrix& h, const StateVector& psi0, const TimeGrid& grid) {
    grid.validate();
    if (!h.square() || h.rows() != psi0.dim())
        throw DimensionError("Hamiltonian/state dimension mismatch");
    if (std::abs(psi0.norm() - 1.0) > 1e-10)
        throw GuardError("initial state is not normalized");

    const EigenDecomposition eig = hermitian_eigendecomposition(h);
    const int n = psi0.dim();
    const ComplexMatrix vdag = eig.vectors.adjoint();
    const StateVector phi = apply(vdag, psi0);

    Trajectory traj;
    traj.grid = grid;
    traj.pure.reserve(grid.points());
    auto& norms = traj.scalars["trace"];
    norms.reserve(grid.points());

    StateVector rotated(n);
    for (int k = 0; k < grid.points(); ++k) {
        const double tau = grid.time_at(k);
        for (int i = 0; i < n; ++i)
            rotated[i] = std::exp(cplx(0.0, -eig.values[i] * tau)) * phi[i];
        StateVector psi = apply(eig.vectors, rotated);
        const double norm = psi.norm();
        if (std::abs(norm - 1.0) > 1e-10)
            throw GuardError("closed evolution lost normalization");
        norms.push_back(norm * norm);
        traj.pure.push_back(std::move(psi));
    }
    traj.scalars["min_eigenvalue"].assign(grid.points(), 0.0);  // rank-one density
    return traj;
}

namespace {

struct ChannelWork {
    double rate;
    ComplexMatrix l;
    ComplexMatrix ldag;
    ComplexMatrix ldl;  // L^dag L
    double scale;       // 2 * rate * |L|_max^2
};

std::vector<ChannelWork> prepare_channels(const std::vector<CollapseChannel>& channels, int n) {
    std::vector<ChannelWork> work;
    for (const auto& ch : channels) {
        if (ch.rate < 0.0) throw ConfigError("collapse rate must be non-negative");
        if (!ch.op.square() || ch.op.rows() != n)
            throw DimensionError("collapse operator dimension mismatch");
        if (ch.rate == 0.0) continue;
        ChannelWork w;
        w.rate = ch.rate;
        w.l = ch.op;
        w.ldag = ch.op.adjoint();
        w.ldl = w.ldag * w.l;
        const double lm = w.l.max_abs();
        w.scale = 2.0 * ch.rate * lm * lm;
        work.push_back(std::move(w));
    }
    return work;
}

// out = -i[H,rho] + sum rate (2 L rho L^dag - {L^dag L, rho}); rho Hermitian.
// Uses M = H rho and  rho H = M^dag, likewise for L^dag L rho.
void rhs_into(const ComplexMatrix& rho, const ComplexMatrix& h,
              const std::vector<ChannelWork>& channels, ComplexMatrix& out, ComplexMatrix& w1,
              ComplexMatrix& w2) {
    const int n = rho.rows();
    const auto& kern = kern::active();
    kern.matmul(h.data(), rho.data(), w1.data(), n);  // w1 = H rho
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cplx hr = w1(i, j);
            const cplx rh = std::conj(w1(j, i));
            out(i, j) = cplx(0.0, -1.0) * (hr - rh);
        }
    for (const auto& ch : channels) {
        kern.matmul(ch.l.data(), rho.data(), w1.data(), n);     // w1 = L rho
        kern.matmul(w1.data(), ch.ldag.data(), w2.data(), n);   // w2 = L rho L^dag
        kern.matmul(ch.ldl.data(), rho.data(), w1.data(), n);   // w1 = L^dag L rho
        const double r = ch.rate;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const cplx anti = w1(i, j) + std::conj(w1(j, i));
                out(i, j) += r * (2.0 * w2(i, j) - anti);
            }
    }
}

}  // namespace

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const std::vector<CollapseChannel>& channels) {
    if (!rho.square() || !h.square() || rho.rows() != h.rows())
        throw DimensionError("dimension mismatch in lindblad_rhs");
    if (rho.hermiticity_deviation() > 1e-8)
        throw GuardError("lindblad_rhs requires a Hermitian density matrix");
    ComplexMatrix sym = rho;
    sym.hermitize();
    const int n = rho.rows();
    const std::vector<ChannelWork> work = prepare_channels(channels, n);
    ComplexMatrix out(n, n), w1(n, n), w2(n, n);
    rhs_into(sym, h, work, out, w1, w2);
    return out;
}

Trajectory evolve_master(const ComplexMatrix& rho0, const ComplexMatrix& h,
                         const std::vector<CollapseChannel>& channels, const TimeGrid& grid,
                         const MasterOptions& options) {
    grid.validate();
    const int n = rho0.rows();
    if (!rho0.square() || !h.square() || h.rows() != n)
        throw DimensionError("dimension mismatch in evolve_master");
    if (rho0.hermiticity_deviation() > 1e-10)
        throw GuardError("initial density matrix is not Hermitian");
    if (std::abs(rho0.trace().real() - 1.0) > 1e-8 || std::abs(rho0.trace().imag()) > 1e-10)
        throw GuardError("initial density matrix must have unit trace");
    {
        const std::vector<double> eigs = hermitian_eigenvalues(rho0);
        if (eigs.front() < -1e-10)
            throw GuardError("initial density matrix has a negative eigenvalue");
    }
    if (options.step_budget <= 0.0) throw ConfigError("step budget must be positive");

    const std::vector<ChannelWork> work = prepare_channels(channels, n);

    double scale = h.max_abs();
    for (const auto& ch : work) scale += ch.scale;
    const double dt_grid = grid.dt();
    int substeps = 1;
    if (scale > 0.0)
        substeps = std::max(1, static_cast<int>(std::ceil(dt_grid * scale / options.step_budget)));
    const double dt = dt_grid / substeps;

    Trajectory traj;
    traj.grid = grid;
    traj.density.reserve(grid.points());
    auto& traces = traj.scalars["trace"];
    auto& mineigs = traj.scalars["min_eigenvalue"];

    ComplexMatrix rho = rho0;
    rho.hermitize();

    ComplexMatrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), stage(n, n), w1(n, n), w2(n, n);
    const auto& kern = kern::active();
    const long nn = static_cast<long>(n) * n;

    auto store = [&](const ComplexMatrix& state) {
        ComplexMatrix snap = state;
        snap.hermitize();
        const double tr = snap.trace().real();
        if (std::abs(tr - 1.0) > 1e-8)
            throw GuardError("master equation trace drift exceeded 1e-8; use a finer grid");
        const std::vector<double> eigs = hermitian_eigenvalues(snap);
        if (eigs.front() < -1e-7)
            throw GuardError("master equation positivity guard exceeded; use a finer grid");
        traces.push_back(tr);
        mineigs.push_back(eigs.front());
        traj.density.push_back(std::move(snap));
    };

    store(rho);
    for (int k = 1; k < grid.points(); ++k) {
        for (int s = 0; s < substeps; ++s) {
            rhs_into(rho, h, work, k1, w1, w2);
            stage = rho;
            kern.axpy(cplx(0.5 * dt), k1.data(), stage.data(), static_cast<int>(nn));
            rhs_into(stage, h, work, k2, w1, w2);
            stage = rho;
            kern.axpy(cplx(0.5 * dt), k2.data(), stage.data(), static_cast<int>(nn));
            rhs_into(stage, h, work, k3, w1, w2);
            stage = rho;
            kern.axpy(cplx(dt), k3.data(), stage.data(), static_cast<int>(nn));
            rhs_into(stage, h, work, k4, w1, w2);

            kern.axpy(cplx(dt / 6.0), k1.data(), rho.data(), static_cast<int>(nn));
            kern.axpy(cplx(dt / 3.0), k2.data(), rho.data(), static_cast<int>(nn));
            kern.axpy(cplx(dt / 3.0), k3.data(), rho.data(), static_cast<int>(nn));
            kern.axpy(cplx(dt / 6.0), k4.data(), rho.data(), static_cast<int>(nn));
            rho.hermitize();
        }
        store(rho);
    }
    return traj;
}

double discriminant(double omega_over_g, double j_over_g) {
    const double om = omega_over_g, j = j_over_g;
    return 2.0 * j * om - j * j - (16.0 + om * om);
}

AnalyticAmplitudes analytic_amplitudes(double theta, double omega_over_g, double j_over_g,
                                       double tau) {
    const double om = omega_over_g, j = j_over_g;
    const double alpha = std::cos(theta) + std::sin(theta);
    const double beta = std::cos(theta) - std::sin(theta);
    const double disc = discriminant(om, j);

    const cplx root = std::sqrt(cplx(disc, 0.0));
    const cplx ch = std::cosh(root * (tau / 2.0));
    const cplx sh_over_root = std::sinh(root * (tau / 2.0)) / root;
    const cplx i(0.0, 1.0);

    const cplx osc = std::exp(i * ((j + om) * tau / 2.0));
    const cplx osc3 = std::exp(i * ((j + 3.0 * om) * tau / 2.0));
    const cplx damp = std::exp(-i * (om * tau));

    AnalyticAmplitudes amps;
    amps.alpha = alpha;
    amps.d_disc = disc;
    amps.c1 = 0.5 * (alpha * osc * ch +
                     damp * (beta - alpha * i * osc3 * (j - om) * sh_over_root));
    amps.c2 = 0.5 * (alpha * osc * ch +
                     damp * (-beta - alpha * i * osc3 * (j - om) * sh_over_root));
    amps.c3 = 2.0 * alpha * i * osc * sh_over_root;
    return amps;
}

StateVector analytic_state(const AnalyticAmplitudes& amps) {
    const double total = std::norm(amps.c1) + std::norm(amps.c2) + 2.0 * std::norm(amps.c3);
    if (std::abs(total - 1.0) > 1e-8)
        throw GuardError("analytic amplitudes are not normalized");

    const DimensionLayout layout = make_layout(2, 1);
    StateVector psi(layout.total());
    const cplx i(0.0, 1.0);
    // |eg00>, |ge00>, |gg10>, |gg01> with e=0, g=1
    psi[4] = std::conj(amps.c1);
    psi[8] = std::conj(amps.c2);
    psi[14] = std::conj(amps.c3);
    psi[13] = -i * std::conj(amps.c3);
    return psi;
}

}  // namespace wgmsim
