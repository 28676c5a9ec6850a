#pragma once

#include <cstdint>
#include <vector>

namespace blowdg {

/// Discrete fields at one time level: cell-major coefficient arrays for u_h
/// and phi_h (nb = k+1 nodal coefficients per cell).
struct FieldState {
    int cells = 0;
    int nb = 1;
    double t = 0.0;
    std::uint64_t n = 0;
    std::vector<double> u;    ///< size cells * nb
    std::vector<double> phi;  ///< size cells * nb

    FieldState() = default;
    FieldState(int cells_, int nb_)
        : cells(cells_), nb(nb_), u(static_cast<std::size_t>(cells_) * nb_, 0.0),
          phi(static_cast<std::size_t>(cells_) * nb_, 0.0) {}

    double& U(int i, int j) { return u[static_cast<std::size_t>(i) * nb + j]; }
    double U(int i, int j) const { return u[static_cast<std::size_t>(i) * nb + j]; }
    double& Phi(int i, int j) { return phi[static_cast<std::size_t>(i) * nb + j]; }
    double Phi(int i, int j) const { return phi[static_cast<std::size_t>(i) * nb + j]; }
};

}  // namespace blowdg
