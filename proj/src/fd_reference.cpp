#include "blowdg/fd_reference.hpp"

#include <cmath>
#include <stdexcept>

#include "blowdg/blowup.hpp"
#include "blowdg/detail/run_loop.hpp"

namespace blowdg {

std::vector<double> fd_grid(double a, double b, int points) {
    if (points < 2) throw std::invalid_argument("fd_grid: need at least 2 points");
    std::vector<double> x(points);
    const double h = (b - a) / points;
    for (int j = 0; j < points; ++j) x[j] = a + (j + 0.5) * h;
    return x;
}

FDState fd_initial_state(const ProblemConfig& config, double a, double b, int points) {
    FDState state(points);
    const std::vector<double> x = fd_grid(a, b, points);
    for (int j = 0; j < points; ++j) {
        state.u[j] = config.u0(x[j]);
        state.phi[j] = config.phi0(x[j]);
    }
    return state;
}

namespace {

struct Pow2 {
    double operator()(double v) const { return v * v; }
};
struct Pow3 {
    double operator()(double v) const { return std::abs(v) * v * v; }
};
struct PowGeneric {
    double p;
    double operator()(double v) const { return std::pow(std::abs(v), p); }
};

}  // namespace

FdStepper::FdStepper(double a, double b, int points, double p)
    : h_((b - a) / points), p_(p), k_scale_(h_ / (b - a)) {
    if (points < 2) throw std::invalid_argument("FdStepper: need at least 2 points");
    if (!(p > 1.0)) throw std::invalid_argument("FdStepper: exponent must exceed 1");
    u_next_.resize(points);
    phi_next_.resize(points);
    if (p == 2.0)
        pow_kind_ = 2;
    else if (p == 3.0)
        pow_kind_ = 3;
    else
        pow_kind_ = 0;
}

double FdStepper::k_of(const std::vector<double>& values) const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum * k_scale_;
}

template <class Nonlin, bool WithK>
StepStats FdStepper::step_impl(FDState& state, double dt, const Nonlin& nonlin,
                               const GhostCells& ghosts) {
    const int n = state.points;
    const double* __restrict u = state.u.data();
    const double* __restrict phi = state.phi.data();
    double* __restrict un = u_next_.data();
    double* __restrict phin = phi_next_.data();

    const double wrap_u_left = ghosts.u_left ? *ghosts.u_left : u[n - 1];
    const double wrap_phi_right = ghosts.phi_right ? *ghosts.phi_right : phi[0];

    double sup_u = 0.0, sum_un = 0.0, sum_rhs_u = 0.0;
    for (int j = 0; j < n; ++j) {
        const double ul = j == 0 ? wrap_u_left : u[j - 1];
        const double rhs = phi[j] - (u[j] - ul) / h_;
        const double v = u[j] + dt * rhs;
        un[j] = v;
        sup_u = std::max(sup_u, std::abs(v));
        if constexpr (WithK) {
            sum_un += v;
            sum_rhs_u += rhs;
        }
    }

    double sup_phi = 0.0, sum_phin = 0.0, sum_rhs_phi = 0.0;
    for (int j = 0; j < n; ++j) {
        const double pr = j + 1 == n ? wrap_phi_right : phi[j + 1];
        const double rhs = nonlin(un[j]) + (pr - phi[j]) / h_;
        const double v = phi[j] + dt * rhs;
        phin[j] = v;
        sup_phi = std::max(sup_phi, std::abs(v));
        if constexpr (WithK) {
            sum_phin += v;
            sum_rhs_phi += rhs;
        }
    }

    state.u.swap(u_next_);
    state.phi.swap(phi_next_);
    state.t += dt;
    state.n += 1;

    StepStats stats;
    stats.sup_u = sup_u;
    stats.sup_phi = sup_phi;
    stats.finite = std::isfinite(sup_u) && std::isfinite(sup_phi);
    if constexpr (WithK) {
        stats.k_u = k_scale_ * sum_un;
        stats.k_phi = k_scale_ * sum_phin;
        stats.dku_dt = k_scale_ * sum_rhs_u;
        stats.dkphi_dt = k_scale_ * sum_rhs_phi;
        stats.finite = stats.finite && std::isfinite(stats.k_u) && std::isfinite(stats.k_phi);
    }
    return stats;
}

StepStats FdStepper::step(FDState& state, double dt, bool with_k, const GhostCells& ghosts) {
    if (!(dt > 0.0)) throw std::invalid_argument("FdStepper::step: dt must be positive");
    if (dt > h_)
        throw std::invalid_argument("FdStepper::step: CFL violation, dt must not exceed h");
    if (static_cast<int>(state.u.size()) != state.points)
        throw std::invalid_argument("FdStepper::step: state shape mismatch");
    switch (pow_kind_) {
        case 2:
            return with_k ? step_impl<Pow2, true>(state, dt, Pow2{}, ghosts)
                          : step_impl<Pow2, false>(state, dt, Pow2{}, ghosts);
        case 3:
            return with_k ? step_impl<Pow3, true>(state, dt, Pow3{}, ghosts)
                          : step_impl<Pow3, false>(state, dt, Pow3{}, ghosts);
        default:
            return with_k ? step_impl<PowGeneric, true>(state, dt, PowGeneric{p_}, ghosts)
                          : step_impl<PowGeneric, false>(state, dt, PowGeneric{p_}, ghosts);
    }
}

FDState fd_step(const FDState& state, double h_fd, double dt, double p) {
    FDState next = state;
    FdStepper stepper(0.0, h_fd * state.points, state.points, p);
    stepper.step(next, dt);
    return next;
}

RunOutput fd_run_until_blowup(const ProblemConfig& config, double a, double b, int points,
                              const TimeStepPolicy& policy, const RunOptions& options) {
    FDState state = fd_initial_state(config, a, b, points);
    FdStepper stepper(a, b, points, config.p);
    RunOutput out = detail::run_adaptive_loop(stepper, state, policy, options, stepper.h());
    if (options.with_k && out.result.steps > 0) {
        // The FD scheme is the k = 0 limit of the DG method, for which the
        // Appendix-C constant is exactly 1.
        out.result.gamma_h = gamma_h(out.result.alpha_h, out.result.beta_h, out.result.dt0, 1.0,
                                     config.p);
    }
    return out;
}

}  // namespace blowdg
