#pragma once

#include <vector>

#include "blowdg/small_matrix.hpp"

namespace blowdg {

/// Degree-k Lagrange basis on [-1, 1] with every cell-local operator the
/// scheme needs.  Nodes are equispaced (endpoints included for k >= 1, the
/// midpoint for k = 0), which makes the basis integrals alpha_j the closed
/// Newton-Cotes weights scaled to interval length 2.
///
/// Immutable after construction; share freely across concurrent runs.
struct ReferenceElement {
    int k = 0;                    ///< polynomial degree, 0..7
    std::vector<double> nodes;    ///< k+1 interpolation points in [-1, 1]

    Matrix M;      ///< mass matrix, M_jl = 1/2 Int phi_j phi_l
    Matrix M_inv;  ///< inverse of M
    Matrix R;      ///< R_jl = Int phi_j phi_l'
    Matrix A;      ///< A_jl = phi_j(-1) phi_l(-1)
    Matrix B;      ///< B_jl = phi_j(-1) phi_l(+1)
    Matrix C;      ///< C_jl = phi_j(+1) phi_l(-1)
    Matrix D;      ///< D_jl = phi_j(+1) phi_l(+1)
    Matrix E;      ///< M^-1 (R + A)
    Matrix F;      ///< -M^-1 B

    std::vector<double> alpha;  ///< alpha_j = Int_{-1}^{1} phi_j

    double rho_min = 0.0;  ///< min over rows j of sum_l (E+_jl + F+_jl)
    double rho_max = 0.0;  ///< max over rows j of the same row sums
    double cond_M = 0.0;   ///< inf-norm condition number of M

    int n_basis() const { return k + 1; }

    /// j-th Lagrange polynomial at x (any x, not just nodes).
    double basis(int j, double x) const;
    /// Derivative of the j-th Lagrange polynomial at x.
    double basis_deriv(int j, double x) const;
    /// Evaluate the expansion sum_j coeff[j] phi_j(x).
    double evaluate(const double* coeffs, double x) const;
};

/// Cell-local matrices for a physical cell of width h: the mass matrix picks
/// up the factor h, everything else is h-independent.
struct CellMatrices {
    Matrix M;  ///< h * reference M
    Matrix R, A, B, C, D;
};

/// Builds the degree-k element.  Throws std::invalid_argument outside 0..7,
/// the range where every alpha_j is positive.
ReferenceElement build_reference_element(int k);

/// Physical-cell matrices; throws on h <= 0.
CellMatrices mass_matrix_scaling(const ReferenceElement& elem, double h);

/// lambda = ((k+1)/2 * max_j alpha_j)^(1-p); throws on p <= 1.
double compute_lambda(const ReferenceElement& elem, double p);

}  // namespace blowdg
