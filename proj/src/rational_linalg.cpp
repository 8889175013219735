#include "symrep/rational_linalg.hpp"

#include <stdexcept>

namespace symrep {

ExactSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    std::size_t rows = a.size();
    if (b.size() != rows)
        throw std::invalid_argument("solve_exact: size mismatch");
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    ExactSolution sol;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) {
            sol.status = SolveStatus::inconsistent;
            return sol;
        }
    if (r < cols) {
        sol.status = SolveStatus::underdetermined;
        return sol;
    }
    sol.status = SolveStatus::unique;
    sol.x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        sol.x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return sol;
}

} // namespace symrep
