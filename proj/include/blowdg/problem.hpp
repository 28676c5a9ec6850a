#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace blowdg {

using ScalarFn = std::function<double(double)>;

/// Problem data for u_tt - u_xx = |u|^p on (a, b) with periodic coupling,
/// split into u_t + u_x = phi, phi_t - phi_x = |u|^p with phi0 = u1 + u0'.
/// u0_prime must be supplied analytically; differencing initial data would
/// pollute phi0 with discretization error.
struct ProblemConfig {
    double p = 2.0;
    ScalarFn u0;
    ScalarFn u1;
    ScalarFn u0_prime;

    ProblemConfig() = default;
    ProblemConfig(double p_, ScalarFn u0_, ScalarFn u1_, ScalarFn u0_prime_)
        : p(p_), u0(std::move(u0_)), u1(std::move(u1_)), u0_prime(std::move(u0_prime_)) {
        if (!(p > 1.0)) throw std::invalid_argument("ProblemConfig: exponent must exceed 1");
        if (!u0 || !u1 || !u0_prime)
            throw std::invalid_argument("ProblemConfig: all initial-data functions required");
    }

    double phi0(double x) const { return u1(x) + u0_prime(x); }

    /// Mismatch of the data with the periodic boundary condition,
    /// max(|u0(a)-u0(b)|, |phi0(a)-phi0(b)|).  Exact traveling-front tests
    /// legitimately carry a small mismatch, so this is a query, not a gate.
    double periodicity_defect(double a, double b) const {
        return std::max(std::abs(u0(a) - u0(b)), std::abs(phi0(a) - phi0(b)));
    }
};

/// Adaptive step rule dt = h^(1+sigma) * min(1, 1/||u||_inf^(1+nu)).
struct TimeStepPolicy {
    double sigma = 0.5;
    double nu = 0.1;
    double dt_cap = 0.0;  ///< optional absolute ceiling; 0 means none

    TimeStepPolicy() = default;
    TimeStepPolicy(double sigma_, double nu_, double dt_cap_ = 0.0)
        : sigma(sigma_), nu(nu_), dt_cap(dt_cap_) {
        if (!(sigma > 0.0) || !(nu > 0.0))
            throw std::invalid_argument("TimeStepPolicy: sigma and nu must be positive");
    }
};

/// The step the policy yields at sup-norm sup_u on mesh width h.
inline double adaptive_dt(double sup_u, const TimeStepPolicy& policy, double h) {
    double dt = std::pow(h, 1.0 + policy.sigma);
    if (sup_u > 1.0) dt /= std::pow(sup_u, 1.0 + policy.nu);
    if (policy.dt_cap > 0.0 && dt > policy.dt_cap) dt = policy.dt_cap;
    return dt;
}

/// adaptive_dt with h^(1+sigma) precomputed and the common exponents
/// special-cased; blow-up runs evaluate this hundreds of millions of times.
class PolicyEvaluator {
public:
    PolicyEvaluator(const TimeStepPolicy& policy, double h)
        : base_(std::pow(h, 1.0 + policy.sigma)), nu_(policy.nu), cap_(policy.dt_cap) {
        if (nu_ == 0.5)
            kind_ = 1;
        else if (nu_ == 1.0)
            kind_ = 2;
        else if (nu_ == 2.0)
            kind_ = 3;
        else if (nu_ == 3.0)
            kind_ = 4;
        else
            kind_ = 0;
    }

    double operator()(double sup_u) const {
        double dt = base_;
        if (sup_u > 1.0) {
            switch (kind_) {
                case 1: dt /= sup_u * std::sqrt(sup_u); break;
                case 2: dt /= sup_u * sup_u; break;
                case 3: dt /= sup_u * sup_u * sup_u; break;
                case 4: {
                    const double s2 = sup_u * sup_u;
                    dt /= s2 * s2;
                    break;
                }
                default: dt /= std::pow(sup_u, 1.0 + nu_);
            }
        }
        if (cap_ > 0.0 && dt > cap_) dt = cap_;
        return dt;
    }

private:
    double base_;
    double nu_;
    double cap_;
    int kind_;
};

}  // namespace blowdg
