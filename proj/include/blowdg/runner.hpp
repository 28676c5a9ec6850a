#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "blowdg/dg_solver.hpp"
#include "blowdg/mesh.hpp"
#include "blowdg/problem.hpp"
#include "blowdg/reference_element.hpp"

namespace blowdg {

enum class RunStatus { blown_up, max_steps, completed };

std::string to_string(RunStatus status);

/// One time level of a run.  Records for n >= 1 carry the K_h increment
/// rates of the step that produced them ((K^n - K^{n-1}) / dt^{n-1}),
/// accumulated from the update right-hand side rather than by differencing.
struct StepRecord {
    std::uint64_t n = 0;
    double t = 0.0;
    double dt = 0.0;  ///< step the policy yields at this state
    double sup_u = 0.0;
    double sup_phi = 0.0;
    double k_u = 0.0;
    double k_phi = 0.0;
    double dku_dt = 0.0;
    double dkphi_dt = 0.0;
};

/// Per-run record: the initial level plus one entry per executed step
/// (possibly decimated), ending in a termination status.
struct RunHistory {
    StepRecord initial;
    std::vector<StepRecord> steps;
    RunStatus status = RunStatus::completed;
    bool overflow = false;
};

/// Summary of a blow-up run; alpha_h, beta_h and gamma_h are the discrete
/// means K_h(u^0), K_h(u^1) and the slope invariant built from them.
struct BlowUpResult {
    double T_h = 0.0;
    std::uint64_t steps = 0;
    double threshold = 0.0;
    double alpha_h = 0.0;
    double beta_h = 0.0;
    double gamma_h = 0.0;
    double dt0 = 0.0;
    double final_sup_u = 0.0;
    RunStatus status = RunStatus::completed;
    bool overflow = false;
};

/// Callback invoked per (recorded) level with the nodal u values.
using StepObserver = std::function<void(const StepRecord&, const double* u, std::size_t count)>;

struct RunOptions {
    double threshold = 1e9;
    std::uint64_t max_steps = 50'000'000;
    double t_end = 0.0;  ///< stop once t reaches this, if positive
    bool record_history = false;
    std::uint64_t record_every = 1;
    bool with_k = true;  ///< accumulate K_h quantities every step
    StepObserver observer;
    std::function<bool(const StepRecord&)> stop_predicate;  ///< optional early stop
    /// Fills inflow ghost values for time t (non-periodic exact-solution
    /// runs); leave empty for the periodic scheme.
    std::function<void(double t, std::vector<double>& u_left, std::vector<double>& phi_right)>
        ghost_provider;
};

struct RunOutput {
    BlowUpResult result;
    RunHistory history;
};

/// Steps the DG scheme under the adaptive policy until the sup norm reaches
/// options.threshold, a non-finite value appears (reported as blown_up with
/// the overflow flag), t_end or a stop predicate fires (completed), or
/// max_steps runs out.  Throws if the threshold does not exceed the initial
/// sup norm.
RunOutput run_until_blowup(const ProblemConfig& config, const Mesh& mesh,
                           const ReferenceElement& elem, const TimeStepPolicy& policy,
                           const RunOptions& options);

}  // namespace blowdg
