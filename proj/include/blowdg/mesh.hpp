#pragma once

#include <stdexcept>
#include <vector>

namespace blowdg {

/// Uniform periodic partition of [a, b] into cell_count cells.
struct Mesh {
    double a = 0.0;
    double b = 1.0;
    int cell_count = 0;
    double h = 0.0;
    std::vector<double> interfaces;  ///< cell_count + 1 strictly increasing points

    Mesh() = default;
    Mesh(double a_, double b_, int cells) : a(a_), b(b_), cell_count(cells) {
        if (!(b > a)) throw std::invalid_argument("Mesh: need b > a");
        if (cells < 2) throw std::invalid_argument("Mesh: need at least 2 cells");
        h = (b - a) / cells;
        interfaces.resize(cells + 1);
        for (int i = 0; i <= cells; ++i) interfaces[i] = a + (b - a) * i / cells;
        interfaces.back() = b;
    }

    double cell_center(int i) const { return 0.5 * (interfaces[i] + interfaces[i + 1]); }

    /// Affine map from the reference coordinate xi in [-1, 1] into cell i.
    double to_physical(int i, double xi) const { return cell_center(i) + 0.5 * h * xi; }

    double length() const { return b - a; }
};

}  // namespace blowdg
