#include "blowdg/runner.hpp"

#include "blowdg/blowup.hpp"
#include "blowdg/detail/run_loop.hpp"

namespace blowdg {

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::blown_up: return "blown_up";
        case RunStatus::max_steps: return "max_steps";
        case RunStatus::completed: return "completed";
    }
    return "unknown";
}

namespace {

class DgLoopAdapter {
public:
    DgLoopAdapter(const ReferenceElement& elem, const Mesh& mesh, double p)
        : stepper_(elem, mesh, p), mesh_(&mesh), elem_(&elem) {}

    StepStats step(FieldState& state, double dt, bool with_k, const GhostCells& ghosts) {
        return stepper_.step(state, dt, with_k, ghosts);
    }
    double k_of(const std::vector<double>& coeffs) const {
        return k_h(coeffs, *mesh_, *elem_);
    }

private:
    DgStepper stepper_;
    const Mesh* mesh_;
    const ReferenceElement* elem_;
};

}  // namespace

RunOutput run_until_blowup(const ProblemConfig& config, const Mesh& mesh,
                           const ReferenceElement& elem, const TimeStepPolicy& policy,
                           const RunOptions& options) {
    FieldState state = make_initial_state(config, mesh, elem);
    DgLoopAdapter adapter(elem, mesh, config.p);
    RunOutput out = detail::run_adaptive_loop(adapter, state, policy, options, mesh.h);
    if (options.with_k && out.result.steps > 0) {
        const double lambda = compute_lambda(elem, config.p);
        out.result.gamma_h =
            gamma_h(out.result.alpha_h, out.result.beta_h, out.result.dt0, lambda, config.p);
    }
    return out;
}

}  // namespace blowdg
