#include "blowdg/reference_element.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "blowdg/quadrature.hpp"

namespace blowdg {

namespace {

double lagrange_eval(const std::vector<double>& nodes, int j, double x) {
    double prod = 1.0;
    for (std::size_t m = 0; m < nodes.size(); ++m) {
        if (static_cast<int>(m) == j) continue;
        prod *= (x - nodes[m]) / (nodes[j] - nodes[m]);
    }
    return prod;
}

double lagrange_deriv(const std::vector<double>& nodes, int j, double x) {
    const std::size_t n = nodes.size();
    double sum = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        if (static_cast<int>(m) == j) continue;
        double prod = 1.0 / (nodes[j] - nodes[m]);
        for (std::size_t l = 0; l < n; ++l) {
            if (static_cast<int>(l) == j || l == m) continue;
            prod *= (x - nodes[l]) / (nodes[j] - nodes[l]);
        }
        sum += prod;
    }
    return sum;
}

}  // namespace

double ReferenceElement::basis(int j, double x) const { return lagrange_eval(nodes, j, x); }

double ReferenceElement::basis_deriv(int j, double x) const { return lagrange_deriv(nodes, j, x); }

double ReferenceElement::evaluate(const double* coeffs, double x) const {
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) sum += coeffs[j] * basis(j, x);
    return sum;
}

ReferenceElement build_reference_element(int k) {
    if (k < 0 || k > 7)
        throw std::invalid_argument("build_reference_element: degree " + std::to_string(k) +
                                    " outside [0, 7]; the basis integrals are only positive there");

    ReferenceElement elem;
    elem.k = k;
    const int nb = k + 1;

    if (k == 0) {
        elem.nodes = {0.0};
    } else {
        elem.nodes.resize(nb);
        // (2j - k)/k keeps the node set exactly symmetric in floating point.
        for (int j = 0; j <= k; ++j) elem.nodes[j] = static_cast<double>(2 * j - k) / k;
    }

    // Exact for the degree <= 2k integrands of M and R.
    const GaussRule quad = gauss_legendre(static_cast<std::size_t>(k + 3));

    elem.M = Matrix(nb, nb);
    elem.R = Matrix(nb, nb);
    for (int j = 0; j < nb; ++j)
        for (int l = 0; l < nb; ++l) {
            elem.M(j, l) = 0.5 * quad.integrate([&](double x) {
                return lagrange_eval(elem.nodes, j, x) * lagrange_eval(elem.nodes, l, x);
            });
            elem.R(j, l) = quad.integrate([&](double x) {
                return lagrange_eval(elem.nodes, j, x) * lagrange_deriv(elem.nodes, l, x);
            });
        }

    std::vector<double> at_left(nb), at_right(nb);
    for (int j = 0; j < nb; ++j) {
        at_left[j] = lagrange_eval(elem.nodes, j, -1.0);
        at_right[j] = lagrange_eval(elem.nodes, j, 1.0);
    }
    elem.A = Matrix(nb, nb);
    elem.B = Matrix(nb, nb);
    elem.C = Matrix(nb, nb);
    elem.D = Matrix(nb, nb);
    for (int j = 0; j < nb; ++j)
        for (int l = 0; l < nb; ++l) {
            elem.A(j, l) = at_left[j] * at_left[l];
            elem.B(j, l) = at_left[j] * at_right[l];
            elem.C(j, l) = at_right[j] * at_left[l];
            elem.D(j, l) = at_right[j] * at_right[l];
        }

    elem.M_inv = elem.M.inverse();
    elem.cond_M = elem.M.inf_norm() * elem.M_inv.inf_norm();

    elem.E = elem.M_inv * (elem.R + elem.A);
    elem.F = (elem.M_inv * elem.B).scaled(-1.0);

    elem.alpha.resize(nb);
    for (int j = 0; j < nb; ++j)
        elem.alpha[j] =
            quad.integrate([&](double x) { return lagrange_eval(elem.nodes, j, x); });

    elem.rho_min = 0.0;
    elem.rho_max = 0.0;
    for (int j = 0; j < nb; ++j) {
        double row = 0.0;
        for (int l = 0; l < nb; ++l)
            row += std::max(elem.E(j, l), 0.0) + std::max(elem.F(j, l), 0.0);
        if (j == 0) {
            elem.rho_min = elem.rho_max = row;
        } else {
            elem.rho_min = std::min(elem.rho_min, row);
            elem.rho_max = std::max(elem.rho_max, row);
        }
    }
    return elem;
}

CellMatrices mass_matrix_scaling(const ReferenceElement& elem, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("mass_matrix_scaling: cell width must be positive");
    return CellMatrices{elem.M.scaled(h), elem.R, elem.A, elem.B, elem.C, elem.D};
}

double compute_lambda(const ReferenceElement& elem, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("compute_lambda: exponent must exceed 1");
    double amax = 0.0;
    for (double a : elem.alpha) amax = std::max(amax, std::abs(a));
    const double base = 0.5 * (elem.k + 1) * amax;
    return std::pow(base, 1.0 - p);
}

}  // namespace blowdg
