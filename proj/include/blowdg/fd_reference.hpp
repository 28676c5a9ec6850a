#pragma once

#include <cstdint>
#include <vector>

#include "blowdg/dg_solver.hpp"
#include "blowdg/problem.hpp"
#include "blowdg/runner.hpp"

namespace blowdg {

/// Upwind finite-difference state on a uniform periodic grid of J points.
/// The grid is co-located with the DG cell midpoints: x_j = a + (j + 1/2) h.
struct FDState {
    int points = 0;
    double t = 0.0;
    std::uint64_t n = 0;
    std::vector<double> u;
    std::vector<double> phi;

    FDState() = default;
    FDState(int points_) : points(points_), u(points_, 0.0), phi(points_, 0.0) {}
};

/// Grid abscissae for a J-point FD grid on [a, b].
std::vector<double> fd_grid(double a, double b, int points);

/// Initial data sampled on the FD grid.
FDState fd_initial_state(const ProblemConfig& config, double a, double b, int points);

/// Upwind Euler comparator: u advances with the backward difference, then
/// phi with the forward difference using the updated u; periodic indices.
/// Requires the CFL bound dt <= h.
class FdStepper {
public:
    FdStepper(double a, double b, int points, double p);

    StepStats step(FDState& state, double dt, bool with_k = false,
                   const GhostCells& ghosts = {});
    double k_of(const std::vector<double>& values) const;
    double h() const { return h_; }

private:
    template <class Nonlin, bool WithK>
    StepStats step_impl(FDState& state, double dt, const Nonlin& nonlin,
                        const GhostCells& ghosts);

    double h_;
    double p_;
    int pow_kind_;
    double k_scale_;
    std::vector<double> u_next_, phi_next_;
};

/// Single-step functional form; throws if dt violates the CFL bound.
FDState fd_step(const FDState& state, double h_fd, double dt, double p);

/// Adaptive-policy blow-up run for the FD scheme, mirroring run_until_blowup.
RunOutput fd_run_until_blowup(const ProblemConfig& config, double a, double b, int points,
                              const TimeStepPolicy& policy, const RunOptions& options);

}  // namespace blowdg
