#pragma once

#include "symrep/report.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace symrep {

struct IdentityResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    // largest float discrepancy seen, 0 for exact checks
    double max_error = 0;
    double seconds = 0;
    // first failing case, if any
    std::string note;
};

// Representation identities over all shapes of size <= max_n.
std::vector<IdentityResult> run_identity_suite(int max_n = 8, std::uint64_t seed = 1);

// Jucys content identity, Catalan coefficients, modified power-sum recurrence.
// The recurrence is checked twice: once with the correction added to y^k
// ("modified_recurrence_plus") and once with it subtracted
// ("modified_recurrence_minus"), which is what the definition of the
// modified power sum implies.
std::vector<IdentityResult> run_jm_suite(int max_n = 7, int recurrence_max_n = 10, int max_k = 6);

// Leading terms of p#_rho * p#_k in the shifted power-sum basis.
std::vector<IdentityResult> run_shifted_product_suite();

// Stieltjes transforms of the co-transition and transition measures against
// their rational forms at random points.
std::vector<IdentityResult> run_stieltjes_suite(int max_n = 10, int points = 20, std::uint64_t seed = 1);

Report identity_report(const std::vector<IdentityResult>& results, std::uint64_t seed);

} // namespace symrep
