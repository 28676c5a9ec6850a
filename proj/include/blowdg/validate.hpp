#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blowdg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationConfig {
    std::uint64_t seed = 20240901;
    bool corrupt_alpha = false;  ///< test hook: perturbs the reference table
};

/// Reference values of the basis integrals alpha_j for k = 0..7 (closed
/// Newton-Cotes weights scaled to interval length 2), as exact rationals.
const std::vector<std::vector<double>>& alpha_reference_table();

/// Basis integrals by an independent route: expand each Lagrange polynomial
/// into monomials and integrate term by term.
std::vector<double> alpha_by_monomial_integration(int k);

/// The full property suite behind the `validate` subcommand: one result per
/// property, deterministic for a fixed seed.
std::vector<CheckResult> run_validation_suite(const ValidationConfig& config);

}  // namespace blowdg
