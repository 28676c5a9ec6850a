#include "blowdg/validate.hpp"

#include <cmath>
#include <sstream>

#include "blowdg/benchmarks.hpp"
#include "blowdg/blowup.hpp"
#include "blowdg/csv.hpp"
#include "blowdg/dg_solver.hpp"
#include "blowdg/fd_reference.hpp"
#include "blowdg/rng.hpp"

namespace blowdg {

const std::vector<std::vector<double>>& alpha_reference_table() {
    static const std::vector<std::vector<double>> table = {
        {2.0},
        {1.0, 1.0},
        {1.0 / 3, 4.0 / 3, 1.0 / 3},
        {1.0 / 4, 3.0 / 4, 3.0 / 4, 1.0 / 4},
        {7.0 / 45, 32.0 / 45, 12.0 / 45, 32.0 / 45, 7.0 / 45},
        {19.0 / 144, 75.0 / 144, 50.0 / 144, 50.0 / 144, 75.0 / 144, 19.0 / 144},
        {41.0 / 420, 216.0 / 420, 27.0 / 420, 272.0 / 420, 27.0 / 420, 216.0 / 420, 41.0 / 420},
        {751.0 / 8640, 3577.0 / 8640, 1323.0 / 8640, 2989.0 / 8640, 2989.0 / 8640, 1323.0 / 8640,
         3577.0 / 8640, 751.0 / 8640}};
    return table;
}

std::vector<double> alpha_by_monomial_integration(int k) {
    const ReferenceElement elem = build_reference_element(k);
    const int nb = k + 1;
    std::vector<double> alpha(nb, 0.0);
    for (int j = 0; j < nb; ++j) {
        std::vector<double> poly = {1.0};
        for (int m = 0; m < nb; ++m) {
            if (m == j) continue;
            // poly *= (x - x_m) / (x_j - x_m)
            std::vector<double> next(poly.size() + 1, 0.0);
            const double scale = 1.0 / (elem.nodes[j] - elem.nodes[m]);
            for (std::size_t c = 0; c < poly.size(); ++c) {
                next[c] += poly[c] * (-elem.nodes[m]) * scale;
                next[c + 1] += poly[c] * scale;
            }
            poly = std::move(next);
        }
        double integral = 0.0;
        for (std::size_t c = 0; c < poly.size(); c += 2) integral += poly[c] * 2.0 / (c + 1.0);
        alpha[j] = integral;
    }
    return alpha;
}

namespace {

std::string fmt(double v) { return format_full(v); }

CheckResult check_matrix_identities() {
    double worst = 0.0;
    for (int k = 0; k <= 7; ++k) {
        const ReferenceElement elem = build_reference_element(k);
        for (int j = 0; j <= k; ++j) {
            double row_rab = 0.0, row_ef = 0.0;
            for (int l = 0; l <= k; ++l) {
                row_rab += elem.R(j, l) + elem.A(j, l) - elem.B(j, l);
                row_ef += elem.E(j, l) + elem.F(j, l);
            }
            worst = std::max({worst, std::abs(row_rab), std::abs(row_ef)});
        }
        const Matrix prod = elem.M * elem.M_inv;
        const Matrix eye = Matrix::identity(k + 1);
        worst = std::max(worst, (prod - eye).max_abs());
    }
    return {"matrix_row_identities", worst <= 1e-12, "max residual " + fmt(worst)};
}

CheckResult check_alpha_table(bool corrupt) {
    auto table = alpha_reference_table();
    if (corrupt) table[3][1] += 1e-6;
    double worst = 0.0;
    for (int k = 0; k <= 7; ++k) {
        const ReferenceElement elem = build_reference_element(k);
        const std::vector<double> analytic = alpha_by_monomial_integration(k);
        for (int j = 0; j <= k; ++j) {
            worst = std::max(worst, std::abs(elem.alpha[j] - table[k][j]));
            worst = std::max(worst, std::abs(analytic[j] - table[k][j]));
            if (!(elem.alpha[j] > 0.0)) worst = 1.0;
        }
    }
    return {"alpha_newton_cotes_table", worst <= 1e-12, "max deviation " + fmt(worst)};
}

CheckResult check_rho_bounds() {
    bool ok = true;
    std::ostringstream detail;
    for (int k = 0; k <= 7; ++k) {
        const ReferenceElement elem = build_reference_element(k);
        if (!(elem.rho_min <= elem.rho_max)) ok = false;
        if (k == 0 && (std::abs(elem.rho_min - 1.0) > 1e-14 || std::abs(elem.rho_max - 1.0) > 1e-14))
            ok = false;
        if (k > 0) detail << ' ';
        detail << "k" << k << ":" << elem.rho_max;
    }
    return {"rho_row_sums", ok, detail.str()};
}

CheckResult check_operator_norm_bound(Rng& rng) {
    double worst_gap = 0.0, worst_eq = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int cells = (rng.next() % 2 == 0) ? 4 : 8;
        const int k = static_cast<int>(rng.next() % 3);
        const double ratio = rng.uniform(1e-6, 1.0);
        const ReferenceElement elem = build_reference_element(k);
        auto [big_m, big_n] = global_update_matrices(elem, cells, ratio);
        const double nm = big_m.inf_norm();
        const double nn = big_n.inf_norm();
        worst_eq = std::max(worst_eq, std::abs(nm - nn));
        const double bound = 1.0 + 2.0 * elem.rho_max * ratio;
        worst_gap = std::max(worst_gap, nm - bound);
    }
    const bool pass = worst_eq <= 1e-12 && worst_gap <= 1e-12;
    return {"operator_norm_bound", pass,
            "max |Mn-Nn| " + fmt(worst_eq) + ", max excess over 1+2*rho*dt/h " + fmt(worst_gap)};
}

CheckResult check_mean_power_inequality(Rng& rng) {
    const Mesh mesh(0.0, 1.0, 8);
    double worst = 0.0;
    for (int k = 0; k <= 3; ++k) {
        const ReferenceElement elem = build_reference_element(k);
        for (double p : {2.0, 3.0}) {
            const double lambda = compute_lambda(elem, p);
            for (int trial = 0; trial < 1000; ++trial) {
                std::vector<double> coeffs(static_cast<std::size_t>(mesh.cell_count) * (k + 1));
                for (double& c : coeffs) c = rng.uniform(0.0, 10.0);
                std::vector<double> powed(coeffs.size());
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    powed[i] = std::pow(coeffs[i], p);
                const double lhs = k_h(powed, mesh, elem);
                const double rhs = lambda * std::pow(k_h(coeffs, mesh, elem), p);
                worst = std::max(worst, rhs - lhs);
            }
        }
    }
    return {"mean_power_inequality", worst <= 1e-9, "max violation " + fmt(worst)};
}

CheckResult check_positivity_boundedness() {
    bool ok_all = true;
    std::ostringstream detail;
    for (int k : {0, 1}) {
        const BenchmarkCase bench = make_benchmark(3, 2.0);
        bool succeeded = false;
        int exponent = 5;
        for (; exponent <= 9; ++exponent) {
            const int cells = 1 << exponent;
            const Mesh mesh(bench.a, bench.b, cells);
            const ReferenceElement elem = build_reference_element(k);
            FieldState state = make_initial_state(bench.problem, mesh, elem);
            auto [su, sp] = sup_norm(state);
            const double lambda_inf = su + sp;
            DgStepper stepper(elem, mesh, bench.p);
            const TimeStepPolicy policy(0.5, bench.p - 1.0);
            bool positive = true, bounded = true;
            for (int n = 0; n < 200 && positive && bounded; ++n) {
                const double dt = adaptive_dt(su, policy, mesh.h);
                const StepStats stats = stepper.step(state, dt);
                su = stats.sup_u;
                for (double v : state.u) positive = positive && v > 0.0;
                for (double v : state.phi) positive = positive && v > 0.0;
                bounded = stats.sup_u + stats.sup_phi <= 2.0 * lambda_inf;
            }
            if (positive && bounded) {
                succeeded = true;
                break;
            }
        }
        ok_all = ok_all && succeeded;
        detail << "k=" << k << (succeeded ? " ok at h=1/2^" + std::to_string(exponent)
                                          : " failed through 1/2^9")
               << (k == 0 ? "; " : "");
    }
    return {"positivity_boundedness", ok_all, detail.str()};
}

CheckResult check_dg0_matches_fd(Rng& rng) {
    const int cells = 32;
    const Mesh mesh(0.0, 1.0, cells);
    const ReferenceElement elem = build_reference_element(0);
    const double p = 2.0;

    FieldState dg(cells, 1);
    FDState fd(cells);
    for (int i = 0; i < cells; ++i) {
        dg.U(i, 0) = fd.u[i] = rng.uniform(0.5, 2.0);
        dg.Phi(i, 0) = fd.phi[i] = rng.uniform(0.5, 2.0);
    }
    DgStepper dg_stepper(elem, mesh, p);
    FdStepper fd_stepper(0.0, 1.0, cells, p);

    double worst = 0.0;
    for (int step = 0; step < 100; ++step) {
        const double dt = rng.uniform(1e-5, 0.9 * mesh.h);
        dg_stepper.step(dg, dt);
        fd_stepper.step(fd, dt);
        for (int i = 0; i < cells; ++i) {
            worst = std::max(worst, std::abs(dg.U(i, 0) - fd.u[i]));
            worst = std::max(worst, std::abs(dg.Phi(i, 0) - fd.phi[i]));
        }
    }
    return {"dg_p0_equals_fd", worst <= 1e-12, "max iterate gap " + fmt(worst)};
}

CheckResult check_basis_reproduction(Rng& rng) {
    double worst = 0.0;
    for (int k = 0; k <= 7; ++k) {
        const ReferenceElement elem = build_reference_element(k);
        std::vector<double> poly(k + 1);
        for (double& c : poly) c = rng.uniform(-1.0, 1.0);
        auto eval_poly = [&](double x) {
            double v = 0.0;
            for (int c = k; c >= 0; --c) v = v * x + poly[c];
            return v;
        };
        std::vector<double> coeffs(k + 1);
        for (int j = 0; j <= k; ++j) coeffs[j] = eval_poly(elem.nodes[j]);
        for (int s = 0; s < 100; ++s) {
            const double x = rng.uniform(-1.0, 1.0);
            worst = std::max(worst, std::abs(elem.evaluate(coeffs.data(), x) - eval_poly(x)));
        }
    }
    return {"basis_reproduces_polynomials", worst <= 1e-12, "max pointwise gap " + fmt(worst)};
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const ValidationConfig& config) {
    Rng rng(config.seed);
    std::vector<CheckResult> results;
    results.push_back(check_matrix_identities());
    results.push_back(check_alpha_table(config.corrupt_alpha));
    results.push_back(check_rho_bounds());
    results.push_back(check_basis_reproduction(rng));
    results.push_back(check_operator_norm_bound(rng));
    results.push_back(check_mean_power_inequality(rng));
    results.push_back(check_positivity_boundedness());
    results.push_back(check_dg0_matches_fd(rng));
    return results;
}

}  // namespace blowdg
