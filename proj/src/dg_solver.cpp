#include "blowdg/dg_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "blowdg/quadrature.hpp"

namespace blowdg {

std::vector<double> interpolate(const ScalarFn& f, const Mesh& mesh,
                                const ReferenceElement& elem) {
    const int nb = elem.n_basis();
    std::vector<double> coeffs(static_cast<std::size_t>(mesh.cell_count) * nb);
    for (int i = 0; i < mesh.cell_count; ++i)
        for (int j = 0; j < nb; ++j)
            coeffs[static_cast<std::size_t>(i) * nb + j] = f(mesh.to_physical(i, elem.nodes[j]));
    return coeffs;
}

FieldState make_initial_state(const ProblemConfig& config, const Mesh& mesh,
                              const ReferenceElement& elem) {
    FieldState state(mesh.cell_count, elem.n_basis());
    state.u = interpolate(config.u0, mesh, elem);
    state.phi = interpolate([&config](double x) { return config.phi0(x); }, mesh, elem);
    return state;
}

std::pair<double, double> sup_norm(const FieldState& state) {
    double su = 0.0, sp = 0.0;
    for (double v : state.u) su = std::max(su, std::abs(v));
    for (double v : state.phi) sp = std::max(sp, std::abs(v));
    return {su, sp};
}

namespace {

struct Pow2 {
    double operator()(double v) const { return v * v; }
};
struct Pow3 {
    double operator()(double v) const { return std::abs(v) * v * v; }
};
struct PowGeneric {
    double p;
    double operator()(double v) const { return std::pow(std::abs(v), p); }
};

void flatten(const Matrix& m, std::vector<double>& out) {
    out.assign(m.data().begin(), m.data().end());
}

}  // namespace

DgStepper::DgStepper(const ReferenceElement& elem, const Mesh& mesh, double p)
    : nb_(elem.n_basis()), h_(mesh.h), p_(p),
      k_scale_(mesh.h / (2.0 * mesh.length())), alpha_(elem.alpha) {
    if (!(p > 1.0)) throw std::invalid_argument("DgStepper: exponent must exceed 1");
    flatten(elem.M_inv * (elem.R + elem.A), g_u_self_);
    flatten(elem.M_inv * elem.B, g_u_left_);
    flatten(elem.M_inv * (elem.D - elem.R), g_phi_self_);
    flatten(elem.M_inv * elem.C, g_phi_right_);
    u_next_.resize(static_cast<std::size_t>(mesh.cell_count) * nb_);
    phi_next_.resize(u_next_.size());
    if (p == 2.0)
        pow_kind_ = 2;
    else if (p == 3.0)
        pow_kind_ = 3;
    else
        pow_kind_ = 0;
}

template <int NB, class Nonlin, bool WithK>
StepStats DgStepper::step_impl(FieldState& state, double dt, const Nonlin& nonlin,
                               const GhostCells& ghosts) {
    const int cells = state.cells;
    const double inv_h = 1.0 / h_;
    const double* __restrict u = state.u.data();
    const double* __restrict phi = state.phi.data();
    double* __restrict un = u_next_.data();
    double* __restrict phin = phi_next_.data();
    const double* __restrict gs = g_u_self_.data();
    const double* __restrict gl = g_u_left_.data();
    const double* __restrict hs = g_phi_self_.data();
    const double* __restrict hr = g_phi_right_.data();
    const double* __restrict alpha = alpha_.data();

    const double* wrap_u_left = ghosts.u_left ? ghosts.u_left
                                               : u + static_cast<std::size_t>(cells - 1) * NB;
    const double* wrap_phi_right = ghosts.phi_right ? ghosts.phi_right : phi;

    double sup_u = 0.0, sum_un = 0.0, sum_rhs_u = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double* ui = u + static_cast<std::size_t>(i) * NB;
        const double* ul = i == 0 ? wrap_u_left : u + static_cast<std::size_t>(i - 1) * NB;
        const double* pi = phi + static_cast<std::size_t>(i) * NB;
        double* out = un + static_cast<std::size_t>(i) * NB;
        for (int j = 0; j < NB; ++j) {
            double trans = 0.0;
            for (int l = 0; l < NB; ++l) trans += gs[j * NB + l] * ui[l] - gl[j * NB + l] * ul[l];
            const double rhs = pi[j] - inv_h * trans;
            const double v = ui[j] + dt * rhs;
            out[j] = v;
            sup_u = std::max(sup_u, std::abs(v));
            if constexpr (WithK) {
                sum_un += alpha[j] * v;
                sum_rhs_u += alpha[j] * rhs;
            }
        }
    }

    double sup_phi = 0.0, sum_phin = 0.0, sum_rhs_phi = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double* pi = phi + static_cast<std::size_t>(i) * NB;
        const double* pr =
            i + 1 == cells ? wrap_phi_right : phi + static_cast<std::size_t>(i + 1) * NB;
        const double* uni = un + static_cast<std::size_t>(i) * NB;
        double* out = phin + static_cast<std::size_t>(i) * NB;
        for (int j = 0; j < NB; ++j) {
            double trans = 0.0;
            for (int l = 0; l < NB; ++l) trans += hs[j * NB + l] * pi[l] - hr[j * NB + l] * pr[l];
            const double rhs = nonlin(uni[j]) - inv_h * trans;
            const double v = pi[j] + dt * rhs;
            out[j] = v;
            sup_phi = std::max(sup_phi, std::abs(v));
            if constexpr (WithK) {
                sum_phin += alpha[j] * v;
                sum_rhs_phi += alpha[j] * rhs;
            }
        }
    }

    state.u.swap(u_next_);
    state.phi.swap(phi_next_);
    state.t += dt;
    state.n += 1;

    StepStats stats;
    stats.sup_u = sup_u;
    stats.sup_phi = sup_phi;
    stats.finite = std::isfinite(sup_u) && std::isfinite(sup_phi);
    if constexpr (WithK) {
        stats.k_u = k_scale_ * sum_un;
        stats.k_phi = k_scale_ * sum_phin;
        stats.dku_dt = k_scale_ * sum_rhs_u;
        stats.dkphi_dt = k_scale_ * sum_rhs_phi;
        stats.finite = stats.finite && std::isfinite(stats.k_u) && std::isfinite(stats.k_phi);
    }
    return stats;
}

template <class Nonlin, bool WithK>
StepStats DgStepper::dispatch_nb(FieldState& state, double dt, const Nonlin& nonlin,
                                 const GhostCells& ghosts) {
    switch (nb_) {
        case 1: return step_impl<1, Nonlin, WithK>(state, dt, nonlin, ghosts);
        case 2: return step_impl<2, Nonlin, WithK>(state, dt, nonlin, ghosts);
        case 3: return step_impl<3, Nonlin, WithK>(state, dt, nonlin, ghosts);
        case 4: return step_impl<4, Nonlin, WithK>(state, dt, nonlin, ghosts);
        case 5: return step_impl<5, Nonlin, WithK>(state, dt, nonlin, ghosts);
        case 6: return step_impl<6, Nonlin, WithK>(state, dt, nonlin, ghosts);
        case 7: return step_impl<7, Nonlin, WithK>(state, dt, nonlin, ghosts);
        case 8: return step_impl<8, Nonlin, WithK>(state, dt, nonlin, ghosts);
        default: throw std::logic_error("DgStepper: unsupported basis size");
    }
}

template <bool WithK>
StepStats DgStepper::dispatch_pow(FieldState& state, double dt, const GhostCells& ghosts) {
    switch (pow_kind_) {
        case 2: return dispatch_nb<Pow2, WithK>(state, dt, Pow2{}, ghosts);
        case 3: return dispatch_nb<Pow3, WithK>(state, dt, Pow3{}, ghosts);
        default: return dispatch_nb<PowGeneric, WithK>(state, dt, PowGeneric{p_}, ghosts);
    }
}

StepStats DgStepper::step(FieldState& state, double dt, bool with_k, const GhostCells& ghosts) {
    if (!(dt > 0.0)) throw std::invalid_argument("DgStepper::step: dt must be positive");
    if (static_cast<int>(state.u.size()) != state.cells * nb_)
        throw std::invalid_argument("DgStepper::step: state shape does not match stepper");
    return with_k ? dispatch_pow<true>(state, dt, ghosts) : dispatch_pow<false>(state, dt, ghosts);
}

FieldState dg_step(const FieldState& state, const ReferenceElement& elem, const Mesh& mesh,
                   const ProblemConfig& config, double dt) {
    FieldState next = state;
    DgStepper stepper(elem, mesh, config.p);
    stepper.step(next, dt);
    return next;
}

std::pair<double, double> consistency_residuals(const ExactPair& exact, const Mesh& mesh,
                                                const ReferenceElement& elem, double p, double tn,
                                                double dt) {
    const int nb = elem.n_basis();
    const int cells = mesh.cell_count;
    const double h = mesh.h;
    const double tnp1 = tn + dt;
    const GaussRule quad = gauss_legendre(16);

    // Basis values at the quadrature points, cached once.
    std::vector<double> phi_at(static_cast<std::size_t>(quad.size()) * nb);
    for (std::size_t q = 0; q < quad.size(); ++q)
        for (int j = 0; j < nb; ++j) phi_at[q * nb + j] = elem.basis(j, quad.points[q]);

    // One-sided interface traces of the exact fields; both sides evaluate the
    // same continuous function, so each jump is identically zero, but the
    // terms stay in the assembly.
    std::vector<double> jump_u(cells + 1), jump_phi(cells + 1);
    for (int i = 0; i <= cells; ++i) {
        const double x = mesh.interfaces[i];
        jump_u[i] = exact.u(x, tn) - exact.u(x, tn);
        jump_phi[i] = exact.phi(x, tn) - exact.phi(x, tn);
    }

    double r_max = 0.0, s_max = 0.0;
    std::vector<double> g_nodes(nb);
    for (int i = 0; i < cells; ++i) {
        for (int j = 0; j < nb; ++j) g_nodes[j] = 0.0;
        for (int j = 0; j < nb; ++j) {
            const double x_node = mesh.to_physical(i, elem.nodes[j]);
            g_nodes[j] = std::pow(std::abs(exact.u(x_node, tnp1)), p);
        }
        for (int j = 0; j < nb; ++j) {
            double r = 0.0, s = 0.0;
            for (std::size_t q = 0; q < quad.size(); ++q) {
                const double x = mesh.to_physical(i, quad.points[q]);
                const double w = 0.5 * h * quad.weights[q] * phi_at[q * nb + j];
                r += w * ((exact.u(x, tnp1) - exact.u(x, tn)) / dt + exact.u_x(x, tn) -
                          exact.phi(x, tn));
                s += w * ((exact.phi(x, tnp1) - exact.phi(x, tn)) / dt - exact.phi_x(x, tn));
            }
            r += jump_u[i] * elem.basis(j, -1.0);
            s -= jump_phi[i + 1] * elem.basis(j, 1.0);
            // Interpolant of |u(., t^{n+1})|^p integrated against psi_j is
            // exactly h * (M g)_j.
            double mg = 0.0;
            for (int l = 0; l < nb; ++l) mg += elem.M(j, l) * g_nodes[l];
            s -= h * mg;
            r_max = std::max(r_max, std::abs(r));
            s_max = std::max(s_max, std::abs(s));
        }
    }
    return {r_max, s_max};
}

std::pair<Matrix, Matrix> global_update_matrices(const ReferenceElement& elem, int cells,
                                                 double dt_over_h) {
    const int nb = elem.n_basis();
    const Matrix ma = Matrix::identity(nb) - (elem.M_inv * (elem.R + elem.A)).scaled(dt_over_h);
    const Matrix mb = (elem.M_inv * elem.B).scaled(dt_over_h);
    const Matrix nd = Matrix::identity(nb) - (elem.M_inv * (elem.D - elem.R)).scaled(dt_over_h);
    const Matrix nc = (elem.M_inv * elem.C).scaled(dt_over_h);

    const std::size_t n = static_cast<std::size_t>(cells) * nb;
    Matrix big_m(n, n), big_n(n, n);
    auto put = [&](Matrix& dest, int bi, int bj, const Matrix& block) {
        for (int r = 0; r < nb; ++r)
            for (int c = 0; c < nb; ++c)
                dest(static_cast<std::size_t>(bi) * nb + r, static_cast<std::size_t>(bj) * nb + c) =
                    block(r, c);
    };
    for (int i = 0; i < cells; ++i) {
        put(big_m, i, i, ma);
        put(big_m, i, i == 0 ? cells - 1 : i - 1, mb);
        put(big_n, i, i, nd);
        put(big_n, i, i + 1 == cells ? 0 : i + 1, nc);
    }
    return {big_m, big_n};
}

}  // namespace blowdg
