#pragma once

#include <optional>
#include <vector>

#include "blowdg/blowup.hpp"
#include "blowdg/dg_solver.hpp"
#include "blowdg/fd_reference.hpp"
#include "blowdg/mesh.hpp"
#include "blowdg/problem.hpp"
#include "blowdg/runner.hpp"

namespace blowdg {

/// One of the four benchmark problems.  Cases 1 and 2 carry the closed-form
/// solution; cases 3 and 4 are blow-up runs with positive data.
struct BenchmarkCase {
    int id = 1;
    double p = 2.0;
    double a = 0.0, b = 1.0;
    double T = 0.0;   ///< prescribed blow-up time at x = 0 (cases 1-2)
    double d = 0.0;   ///< front slope (case 2)
    double mu = 0.0;  ///< amplitude constant (cases 1-2)
    ProblemConfig problem;
    bool has_exact = false;
    ExactPair exact;
};

/// Builds case 1..4.  T applies to cases 1-2 (defaults 0.1 and 0.5), d to
/// case 2 and must lie in (0, 1).
BenchmarkCase make_benchmark(int id, double p, std::optional<double> T = std::nullopt,
                             double d = 0.01);

/// Closed-form solution value; rejects evaluation at or beyond the blow-up
/// front T + d x.
double exact_solution(const BenchmarkCase& bench, double x, double t);

/// Max relative PDE residual |u_tt - u_xx - |u|^p| / max(1, |u|^p) of the
/// closed form, probed with fourth-order difference stencils (spacing 1e-3)
/// on an early-time grid away from the front.  Guards the formulas
/// themselves; cases 1-2 only.
double residual_check_exact(const BenchmarkCase& bench);

/// Evaluate the broken-polynomial expansion of a coefficient vector at x.
double evaluate_coeffs(const std::vector<double>& coeffs, const Mesh& mesh,
                       const ReferenceElement& elem, double x);

/// Relative L2 (per-cell Gauss quadrature) and L-infinity (nodes plus 8
/// interior samples per cell) errors of the u field against a reference
/// function of x.  Throws if the reference norm vanishes.
std::pair<double, double> error_norms(const FieldState& state, const ScalarFn& reference,
                                      const Mesh& mesh, const ReferenceElement& elem);

struct ErrorRow {
    double time = 0.0;
    double rel_l2 = 0.0;
    double rel_linf = 0.0;
};

struct BenchmarkReport {
    int case_id = 0;
    double p = 0.0;
    std::vector<ErrorRow> errors;              ///< cases 1, 2, 4
    std::optional<BlowUpResult> blowup;        ///< cases 3, 4
    std::optional<InequalityReport> monitoring;  ///< case 3
};

struct BenchmarkOptions {
    int cells = 64;
    int degree = 1;
    TimeStepPolicy policy{0.5, 0.1};
    double threshold = 1e9;
    std::uint64_t max_steps = 50'000'000;
    std::vector<double> sample_times;  ///< empty: quartiles (1-2) / table times (4)
    int fd_refinement = 16;            ///< case 4: FD grid is this much finer
};

/// Drives the solver on a case: error tables against the exact solution
/// (cases 1-2) or against the refined FD comparator (case 4), and a blow-up
/// run with per-step monitoring for case 3.
BenchmarkReport run_benchmark(const BenchmarkCase& bench, const BenchmarkOptions& options);

/// Inflow ghost-cell provider built from the case's exact solution.  The
/// traveling-front data of case 2 are not periodic, so its runs feed the
/// scheme exact traces instead of the periodic wrap.
std::function<void(double, std::vector<double>&, std::vector<double>&)> make_exact_ghost_provider(
    const BenchmarkCase& bench, const Mesh& mesh, const ReferenceElement& elem);

}  // namespace blowdg
