#include "blowdg/blowup.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blowdg {

double k_h(const std::vector<double>& coeffs, const Mesh& mesh, const ReferenceElement& elem) {
    const int nb = elem.n_basis();
    const int cells = mesh.cell_count;
    double sum = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double* c = coeffs.data() + static_cast<std::size_t>(i) * nb;
        for (int j = 0; j < nb; ++j) sum += elem.alpha[j] * c[j];
    }
    return sum * mesh.h / (2.0 * mesh.length());
}

double gamma_h(double alpha_h, double beta_h, double dt0, double lambda, double p) {
    if (!(dt0 > 0.0)) throw std::invalid_argument("gamma_h: dt0 must be positive");
    const double slope = (beta_h - alpha_h) / dt0;
    return slope * slope - lambda / (p + 1.0) * std::pow(alpha_h, p + 1.0);
}

double g_function(double z, double lambda, double p, double gamma) {
    const double radicand = lambda / (p + 1.0) * std::pow(z, p + 1.0) + gamma;
    if (radicand < 0.0)
        throw std::domain_error("g_function: negative radicand; inconsistent inputs");
    return std::sqrt(radicand);
}

BlowupInequalityChecker::BlowupInequalityChecker(double lambda, double p, double rel_tol)
    : lambda_(lambda), p_(p), rel_tol_(rel_tol) {}

void BlowupInequalityChecker::fail(std::uint64_t n, const std::string& what, double lhs,
                                   double rhs) {
    if (report_.first_violation) return;
    report_.ok = false;
    report_.first_violation = n;
    report_.violated = what;
    report_.lhs = lhs;
    report_.rhs = rhs;
}

void BlowupInequalityChecker::feed(const StepRecord& record) {
    if (!have_initial_) {
        have_initial_ = true;
        prev_ = record;
        report_.hypotheses_ok = report_.hypotheses_ok && record.k_u >= 0.0;
        return;
    }

    const std::uint64_t n = prev_.n;  // checking the step n -> n+1

    if (!have_gamma_) {
        // First step fixes gamma_h; the squared-slope bound is an identity
        // there, so build it from the same slope the checker will test.
        have_gamma_ = true;
        report_.gamma =
            record.dku_dt * record.dku_dt -
            lambda_ / (p_ + 1.0) * std::pow(prev_.k_u, p_ + 1.0);
        if (!(record.k_u > 0.0)) report_.hypotheses_ok = false;
    }

    // Mean-slope identity: (K_h(u^{n+1}) - K_h(u^n))/dt^n = K_h(phi^n).
    {
        const double lhs = record.dku_dt;
        const double rhs = prev_.k_phi;
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        if (std::abs(lhs - rhs) > rel_tol_ * scale)
            fail(n, "mean_slope_identity", lhs, rhs);
    }

    // Growth of the phi mean: (K_h(phi^{n+1}) - K_h(phi^n))/dt^n
    // >= lambda K_h(u^{n+1})^p.
    {
        const double lhs = record.dkphi_dt;
        const double rhs = lambda_ * std::pow(record.k_u, p_);
        if (lhs < rhs - rel_tol_ * std::max(1.0, std::abs(rhs)))
            fail(n, "phi_mean_growth", lhs, rhs);
    }

    // Strict monotonicity of K_h(u^n).
    if (!(record.k_u > prev_.k_u)) fail(n, "k_h_monotonicity", record.k_u, prev_.k_u);

    // Squared-slope bound against gamma_h.
    {
        const double lhs = record.dku_dt * record.dku_dt;
        const double rhs =
            lambda_ / (p_ + 1.0) * std::pow(prev_.k_u, p_ + 1.0) + report_.gamma;
        if (lhs < rhs - rel_tol_ * std::max(1.0, std::abs(rhs)))
            fail(n, "squared_slope_bound", lhs, rhs);
    }

    ++report_.checked_steps;
    prev_ = record;
}

InequalityReport check_blowup_inequalities(const RunHistory& history, double lambda, double p) {
    BlowupInequalityChecker checker(lambda, p);
    checker.feed(history.initial);
    for (const StepRecord& rec : history.steps) checker.feed(rec);
    return checker.report();
}

std::pair<double, double> XiCurve::fit_line() const {
    double sx = 0.0, st = 0.0, sxx = 0.0, sxt = 0.0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!crossed[i]) continue;
        sx += x[i];
        st += time[i];
        sxx += x[i] * x[i];
        sxt += x[i] * time[i];
        ++m;
    }
    if (m < 2) throw std::runtime_error("XiCurve::fit_line: fewer than two crossed nodes");
    const double denom = m * sxx - sx * sx;
    const double slope = (m * sxt - sx * st) / denom;
    const double intercept = (st - slope * sx) / m;
    return {slope, intercept};
}

XiTracker::XiTracker(std::vector<double> node_x, std::vector<double> levels) {
    curves_.resize(levels.size());
    remaining_.resize(levels.size());
    for (std::size_t r = 0; r < levels.size(); ++r) {
        curves_[r].R = levels[r];
        curves_[r].x = node_x;
        curves_[r].time.assign(node_x.size(), 0.0);
        curves_[r].crossed.assign(node_x.size(), false);
        remaining_[r] = node_x.size();
    }
}

void XiTracker::observe(const StepRecord& record, const double* u, std::size_t count) {
    for (std::size_t r = 0; r < curves_.size(); ++r) {
        if (remaining_[r] == 0) continue;
        XiCurve& c = curves_[r];
        for (std::size_t i = 0; i < count; ++i) {
            if (!c.crossed[i] && std::abs(u[i]) >= c.R) {
                c.crossed[i] = true;
                c.time[i] = record.t;
                --remaining_[r];
            }
        }
    }
}

bool XiTracker::all_crossed_highest() const {
    std::size_t highest = 0;
    for (std::size_t r = 1; r < curves_.size(); ++r)
        if (curves_[r].R > curves_[highest].R) highest = r;
    return remaining_[highest] == 0;
}

XiCurve xi_curve(const NodalHistory& history, double R) {
    XiTracker tracker(history.node_x, {R});
    StepRecord rec;
    for (std::size_t m = 0; m < history.times.size(); ++m) {
        rec.n = m;
        rec.t = history.times[m];
        tracker.observe(rec, history.values[m].data(), history.values[m].size());
    }
    return tracker.curve(0);
}

namespace {

// Adaptive Simpson on [a, b] with simple relative control.
template <class F>
double adaptive_simpson_rec(const F& f, double a, double fa, double b, double fb, double m,
                            double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double rel_tol) {
    const double fa = f(a), fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = rel_tol * std::max(std::abs(whole), 1e-30);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, 60);
}

}  // namespace

double blowup_time_upper_bound(double alpha_h, double lambda, double p, double gamma, double h,
                               double C) {
    if (!(p > 1.0))
        throw std::invalid_argument("blowup_time_upper_bound: tail integral diverges for p <= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("blowup_time_upper_bound: lambda <= 0");
    if (alpha_h < 0.0) throw std::invalid_argument("blowup_time_upper_bound: alpha_h < 0");
    if (alpha_h == 0.0 && gamma <= 0.0) return std::numeric_limits<double>::infinity();

    const double coeff = lambda / (p + 1.0);
    auto inv_g = [&](double z) { return 1.0 / std::sqrt(coeff * std::pow(z, p + 1.0) + gamma); };

    // Split where the two radicand terms balance, then map the tail with
    // z = z0 / r^2 so the transformed integrand stays bounded for p >= 2.
    double z0 = alpha_h;
    if (gamma > 0.0) z0 = std::max(z0, std::pow(gamma / coeff, 1.0 / (p + 1.0)));
    z0 = std::max(z0, 1e-30);

    double head = 0.0;
    if (z0 > alpha_h) head = adaptive_simpson(inv_g, alpha_h, z0, 1e-8);

    const double tail_amplitude = 2.0 * std::pow(z0, 0.5 * (1.0 - p)) / std::sqrt(coeff);
    auto tail_integrand = [&](double r) {
        if (r < 1e-8) return tail_amplitude * std::pow(r, p - 2.0);
        const double z = z0 / (r * r);
        return 2.0 * z0 / (r * r * r) * inv_g(z);
    };
    const double r_lo = (p >= 2.0) ? 0.0 : 1e-12;
    const double tail = adaptive_simpson(tail_integrand, r_lo, 1.0, 1e-8);

    return 2.0 * (head + tail + C * h);
}

double stability_mesh_bound(int N, double lambda_inf, double sigma, double rho, double p) {
    if (N < 1 || !(lambda_inf > 0.0) || !(sigma > 0.0) || !(rho > 0.0) || !(p > 1.0))
        throw std::invalid_argument("stability_mesh_bound: all inputs must be positive, p > 1");
    const double term1 =
        std::pow((std::pow(1.5, 1.0 / N) - 1.0) / (2.0 * rho), 1.0 / sigma);
    const double term2 =
        lambda_inf /
        std::pow(12.0 * N * lambda_inf * (1.0 + std::pow(2.0 * lambda_inf, p - 1.0)),
                 1.0 / (1.0 + sigma));
    const double denom3 =
        4.0 * std::pow(3.0 * lambda_inf, p) *
        (1.0 + std::pow(lambda_inf, p * sigma) /
                   (std::pow(6.0, p) * std::pow(1.0 + std::pow(2.0 * lambda_inf, p - 1.0), p)));
    const double term3 = lambda_inf / std::pow(denom3, 1.0 / (1.0 + sigma));
    return std::min({term1, term2, term3});
}

}  // namespace blowdg
