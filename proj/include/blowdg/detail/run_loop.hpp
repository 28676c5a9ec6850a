#pragma once

#include <cmath>

#include "blowdg/runner.hpp"

namespace blowdg::detail {

/// Shared adaptive-stepping loop.  Stepper must provide
///   StepStats step(State&, double dt, bool with_k);
///   double k_of(const std::vector<double>&) const;
/// and State must expose u, phi, t, n.
template <class Stepper, class State>
RunOutput run_adaptive_loop(Stepper& stepper, State& state, const TimeStepPolicy& policy,
                            const RunOptions& options, double h) {
    RunOutput out;
    RunHistory& hist = out.history;
    BlowUpResult& res = out.result;

    double sup_u = 0.0, sup_phi = 0.0;
    for (double v : state.u) sup_u = std::max(sup_u, std::abs(v));
    for (double v : state.phi) sup_phi = std::max(sup_phi, std::abs(v));
    if (!(options.threshold > sup_u))
        throw std::invalid_argument("run: threshold must exceed the initial sup norm");

    const PolicyEvaluator policy_dt(policy, h);

    StepRecord rec;
    rec.n = 0;
    rec.t = state.t;
    rec.dt = policy_dt(sup_u);
    rec.sup_u = sup_u;
    rec.sup_phi = sup_phi;
    if (options.with_k) {
        rec.k_u = stepper.k_of(state.u);
        rec.k_phi = stepper.k_of(state.phi);
    }
    hist.initial = rec;
    if (options.observer) options.observer(rec, state.u.data(), state.u.size());

    res.threshold = options.threshold;
    res.alpha_h = rec.k_u;
    res.dt0 = rec.dt;

    // Compensated time sum; millions of tiny steps otherwise drift.
    double t_sum = state.t, t_comp = 0.0;
    auto add_time = [&](double dt) {
        const double y = dt - t_comp;
        const double s = t_sum + y;
        t_comp = (s - t_sum) - y;
        t_sum = s;
    };

    RunStatus status = RunStatus::max_steps;
    bool overflow = false;
    std::uint64_t executed = 0;
    StepRecord last = rec;

    std::vector<double> ghost_u, ghost_phi;
    GhostCells ghosts;

    while (executed < options.max_steps) {
        double dt = last.dt;
        bool clipped_to_end = false;
        if (options.t_end > 0.0 && t_sum + dt >= options.t_end) {
            dt = options.t_end - t_sum;
            clipped_to_end = true;
            if (!(dt > 0.0)) {
                status = RunStatus::completed;
                break;
            }
        }

        if (options.ghost_provider) {
            options.ghost_provider(t_sum, ghost_u, ghost_phi);
            ghosts.u_left = ghost_u.data();
            ghosts.phi_right = ghost_phi.data();
        }
        const StepStats stats = stepper.step(state, dt, options.with_k, ghosts);
        add_time(dt);
        state.t = t_sum;
        ++executed;

        StepRecord cur;
        cur.n = executed;
        cur.t = t_sum;
        cur.dt = policy_dt(stats.sup_u);
        cur.sup_u = stats.sup_u;
        cur.sup_phi = stats.sup_phi;
        cur.k_u = stats.k_u;
        cur.k_phi = stats.k_phi;
        cur.dku_dt = stats.dku_dt;
        cur.dkphi_dt = stats.dkphi_dt;

        if (executed == 1) res.beta_h = cur.k_u;

        const bool record = options.record_history &&
                            (options.record_every <= 1 || executed % options.record_every == 0);
        if (record) hist.steps.push_back(cur);
        if (options.observer) options.observer(cur, state.u.data(), state.u.size());

        if (!stats.finite) {
            status = RunStatus::blown_up;
            overflow = true;
            if (!record && options.record_history) hist.steps.push_back(cur);
            last = cur;
            break;
        }
        if (stats.sup_u >= options.threshold) {
            status = RunStatus::blown_up;
            if (!record && options.record_history) hist.steps.push_back(cur);
            last = cur;
            break;
        }
        if (clipped_to_end) {
            status = RunStatus::completed;
            if (!record && options.record_history) hist.steps.push_back(cur);
            last = cur;
            break;
        }
        if (options.stop_predicate && options.stop_predicate(cur)) {
            status = RunStatus::completed;
            if (!record && options.record_history) hist.steps.push_back(cur);
            last = cur;
            break;
        }
        last = cur;
    }

    hist.status = status;
    hist.overflow = overflow;
    res.T_h = t_sum;
    res.steps = executed;
    res.final_sup_u = last.sup_u;
    res.status = status;
    res.overflow = overflow;
    return out;
}

}  // namespace blowdg::detail
