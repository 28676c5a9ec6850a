#include "blowdg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blowdg {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {p0, 0.0};
    for (std::size_t m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

GaussRule gauss_legendre(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one point");
    GaussRule rule;
    rule.points.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Chebyshev-like initial guess for the i-th positive root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            auto [p, d] = legendre(n, x);
            dp = d;
            const double dx = p / d;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, d] = legendre(n, x);
        (void)p;
        dp = d;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.points[i] = -x;
        rule.points[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        auto [p, d] = legendre(n, 0.0);
        (void)p;
        rule.points[half] = 0.0;
        rule.weights[half] = 2.0 / (d * d);
    }
    return rule;
}

}  // namespace blowdg
