#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blowdg/mesh.hpp"
#include "blowdg/reference_element.hpp"
#include "blowdg/runner.hpp"

namespace blowdg {

/// Discrete mean K_h of a coefficient array: (1/(b-a)) sum_i int_{K_i} v_h,
/// evaluated exactly through the basis integrals alpha_j.
double k_h(const std::vector<double>& coeffs, const Mesh& mesh, const ReferenceElement& elem);

/// gamma_h = ((beta_h - alpha_h)/dt0)^2 - lambda/(p+1) * alpha_h^(p+1).
double gamma_h(double alpha_h, double beta_h, double dt0, double lambda, double p);

/// G(z) = sqrt(lambda/(p+1) z^(p+1) + gamma); strictly increasing for
/// z >= alpha_h.  Throws on a negative radicand, which signals inconsistent
/// inputs.
double g_function(double z, double lambda, double p, double gamma);

/// Outcome of the per-step Proposition-4.3 monitoring.
struct InequalityReport {
    bool ok = true;
    bool hypotheses_ok = true;  ///< alpha_h >= 0 and beta_h > 0
    std::uint64_t checked_steps = 0;
    std::optional<std::uint64_t> first_violation;
    std::string violated;  ///< which check failed first
    double lhs = 0.0, rhs = 0.0;
    double gamma = 0.0;
};

/// Streaming checker for the discrete blow-up relations: the mean-slope
/// identity, the phi-mean growth inequality, strict monotonicity of K_h(u),
/// and the squared-slope bound.  Feed every level in order, initial first.
class BlowupInequalityChecker {
public:
    BlowupInequalityChecker(double lambda, double p, double rel_tol = 1e-10);

    void feed(const StepRecord& record);
    const InequalityReport& report() const { return report_; }

private:
    void fail(std::uint64_t n, const std::string& what, double lhs, double rhs);

    double lambda_;
    double p_;
    double rel_tol_;
    bool have_initial_ = false;
    bool have_gamma_ = false;
    StepRecord prev_;
    InequalityReport report_;
};

/// Runs the checker over a stored history; returns the first violation or
/// success.
InequalityReport check_blowup_inequalities(const RunHistory& history, double lambda, double p);

/// First-crossing curve: per node x, the earliest recorded time with
/// |u_h(x, t)| >= R.  Nodes that never cross stay unset.
struct XiCurve {
    double R = 0.0;
    std::vector<double> x;
    std::vector<double> time;      ///< meaningful where crossed[i]
    std::vector<bool> crossed;

    /// Least-squares slope/intercept of time vs x over crossed nodes.
    std::pair<double, double> fit_line() const;
};

/// Dense nodal trace of a run, for the offline xi computation.
struct NodalHistory {
    std::vector<double> node_x;
    std::vector<double> times;
    std::vector<std::vector<double>> values;  ///< one row per time
};

XiCurve xi_curve(const NodalHistory& history, double R);

/// Streaming first-crossing tracker for several levels at once; attach its
/// observe() to a run.
class XiTracker {
public:
    XiTracker(std::vector<double> node_x, std::vector<double> levels);

    void observe(const StepRecord& record, const double* u, std::size_t count);
    bool all_crossed_highest() const;
    const XiCurve& curve(std::size_t level_index) const { return curves_[level_index]; }
    std::size_t level_count() const { return curves_.size(); }

private:
    std::vector<XiCurve> curves_;
    std::vector<std::size_t> remaining_;
};

/// Lemma-4.6 style bound 2 * (int_{alpha_h}^inf dz/G(z) + C h).  The improper
/// integral is mapped to [0, 1] and integrated adaptively to a 1e-8 relative
/// tolerance.  Throws for p <= 1 (the tail would diverge).
double blowup_time_upper_bound(double alpha_h, double lambda, double p, double gamma, double h,
                               double C);

/// Mesh-size threshold from the local-stability theorem: the minimum of the
/// three terms of h_{N,Lambda}.  Diagnostic only.
double stability_mesh_bound(int N, double lambda_inf, double sigma, double rho, double p);

}  // namespace blowdg
