#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "blowdg/field_state.hpp"
#include "blowdg/mesh.hpp"
#include "blowdg/problem.hpp"
#include "blowdg/reference_element.hpp"

namespace blowdg {

/// Nodal interpolation of f onto the broken space: coefficient j of cell i is
/// f at the mapped node.
std::vector<double> interpolate(const ScalarFn& f, const Mesh& mesh, const ReferenceElement& elem);

/// State at t = 0 with u = I_h u0 and phi = I_h phi0.
FieldState make_initial_state(const ProblemConfig& config, const Mesh& mesh,
                              const ReferenceElement& elem);

/// (||u_h||_inf, ||phi_h||_inf): max |coefficient| over all cells and nodes.
std::pair<double, double> sup_norm(const FieldState& state);

/// Per-step quantities the solver hands back.  The K_h members are the
/// discrete means of the NEW state and of the update right-hand sides
/// ((next - current)/dt), accumulated in the sweep so later identity checks
/// do not have to difference nearly equal sums.  Filled only when requested.
struct StepStats {
    double sup_u = 0.0;
    double sup_phi = 0.0;
    bool finite = true;
    double k_u = 0.0;
    double k_phi = 0.0;
    double dku_dt = 0.0;
    double dkphi_dt = 0.0;
};

/// Ghost-cell coefficients replacing the periodic wrap at the two inflow
/// interfaces: cell "0" for u (left of the domain) and cell "I+1" for phi
/// (right of the domain).  Used by the traveling-front benchmarks whose
/// exact solutions are not periodic; everything else runs periodic.
struct GhostCells {
    const double* u_left = nullptr;
    const double* phi_right = nullptr;
};

/// Advances the fully discrete scheme.  The two sweeps are ordered: every
/// cell's u is updated first, then every phi; the nonlinear term uses the
/// updated u.  A simultaneous update would be a different scheme.
class DgStepper {
public:
    DgStepper(const ReferenceElement& elem, const Mesh& mesh, double p);

    /// One step of size dt, in place.  with_k requests the K_h accumulators.
    StepStats step(FieldState& state, double dt, bool with_k = false,
                   const GhostCells& ghosts = {});

    double h() const { return h_; }
    int n_basis() const { return nb_; }

private:
    template <int NB, class Nonlin, bool WithK>
    StepStats step_impl(FieldState& state, double dt, const Nonlin& nonlin,
                        const GhostCells& ghosts);
    template <class Nonlin, bool WithK>
    StepStats dispatch_nb(FieldState& state, double dt, const Nonlin& nonlin,
                          const GhostCells& ghosts);
    template <bool WithK>
    StepStats dispatch_pow(FieldState& state, double dt, const GhostCells& ghosts);

    int nb_;
    double h_;
    double p_;
    int pow_kind_;  // 2, 3, or 0 for the generic |u|^p
    double k_scale_;
    std::vector<double> g_u_self_;     // M^-1 (R + A)
    std::vector<double> g_u_left_;     // M^-1 B
    std::vector<double> g_phi_self_;   // M^-1 (D - R)
    std::vector<double> g_phi_right_;  // M^-1 C
    std::vector<double> alpha_;
    std::vector<double> u_next_, phi_next_;
};

/// Functional single-step form of the scheme (12): returns the advanced
/// state and leaves the argument untouched.
FieldState dg_step(const FieldState& state, const ReferenceElement& elem, const Mesh& mesh,
                   const ProblemConfig& config, double dt);

/// Exact solution bundle used by the consistency residuals: u, u_x, phi and
/// phi_x as functions of (x, t).
struct ExactPair {
    std::function<double(double, double)> u;
    std::function<double(double, double)> u_x;
    std::function<double(double, double)> phi;
    std::function<double(double, double)> phi_x;
};

/// Largest-magnitude entries of the consistency residual vectors r^n, s^n
/// when the exact solution is inserted into the scheme (interface jump terms
/// included; they vanish only because the exact solution is continuous).
std::pair<double, double> consistency_residuals(const ExactPair& exact, const Mesh& mesh,
                                                const ReferenceElement& elem, double p, double tn,
                                                double dt);

/// Global one-step update matrices of the scheme in operator form,
/// block-circulant with (k+1)x(k+1) blocks: u_next = Mn u + dt phi,
/// phi_next = Nn phi + dt f(u_next).
std::pair<Matrix, Matrix> global_update_matrices(const ReferenceElement& elem, int cells,
                                                 double dt_over_h);

}  // namespace blowdg
