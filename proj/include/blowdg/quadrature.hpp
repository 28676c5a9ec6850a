#pragma once

#include <cstddef>
#include <vector>

namespace blowdg {

/// Gauss-Legendre rule on [-1, 1]: exact for polynomials of degree 2n-1.
struct GaussRule {
    std::vector<double> points;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }

    template <class F>
    double integrate(F&& f) const {
        double sum = 0.0;
        for (std::size_t q = 0; q < points.size(); ++q) sum += weights[q] * f(points[q]);
        return sum;
    }
};

/// Nodes and weights for the n-point Gauss-Legendre rule (n >= 1), computed
/// by Newton iteration on the Legendre polynomial and symmetrized exactly.
GaussRule gauss_legendre(std::size_t n);

}  // namespace blowdg
