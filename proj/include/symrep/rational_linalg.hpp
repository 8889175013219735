#pragma once

#include "symrep/types.hpp"

#include <vector>

namespace symrep {

enum class SolveStatus { unique, underdetermined, inconsistent };

struct ExactSolution {
    SolveStatus status = SolveStatus::inconsistent;
    std::vector<Rational> x;
};

// Gaussian elimination over Q for a (rows x cols) system, rows >= cols allowed.
ExactSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

} // namespace symrep
