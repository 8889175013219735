#pragma once

// Test-only reference implementations.  Deliberately naive and independent
// of the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// Euler's pentagonal recurrence.
inline std::vector<long> partition_counts(int max_n)
{
    std::vector<long> p(max_n + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        long acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            long sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[n - g1];
            if (g2 <= n)
                acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return p;
}

// Places 1, 2, ... one at a time in every admissible box of the diagram.
// rows[i] = filled length of row i; visit is called on each complete filling
// with pos[k-1] = (row, col) of k.
inline void for_each_filling(const std::vector<int>& outer, const std::vector<int>& inner,
                             const std::function<void(const std::vector<std::pair<int, int>>&)>& visit)
{
    std::vector<int> filled(outer.size(), 0);
    for (std::size_t i = 0; i < inner.size(); ++i)
        filled[i] = inner[i];
    int total = 0;
    for (std::size_t i = 0; i < outer.size(); ++i)
        total += outer[i] - filled[i];
    std::vector<std::pair<int, int>> pos;
    std::function<void()> rec = [&] {
        if (static_cast<int>(pos.size()) == total) {
            visit(pos);
            return;
        }
        for (std::size_t i = 0; i < outer.size(); ++i) {
            if (filled[i] >= outer[i])
                continue;
            // the box above must already be filled
            if (i > 0 && filled[i - 1] <= filled[i])
                continue;
            pos.emplace_back(static_cast<int>(i), filled[i]);
            ++filled[i];
            rec();
            --filled[i];
            pos.pop_back();
        }
    };
    rec();
}

inline long count_fillings(const std::vector<int>& outer, const std::vector<int>& inner = {})
{
    long c = 0;
    for_each_filling(outer, inner, [&](const auto&) { ++c; });
    return c;
}

// Counts by DFS without materialising positions.
inline long count_syt(std::vector<int> shape)
{
    std::vector<int> filled(shape.size(), 0);
    int total = 0;
    for (int x : shape)
        total += x;
    long count = 0;
    std::function<void(int)> rec = [&](int placed) {
        if (placed == total) {
            ++count;
            return;
        }
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (filled[i] >= shape[i] || (i > 0 && filled[i - 1] <= filled[i]))
                continue;
            ++filled[i];
            rec(placed + 1);
            --filled[i];
        }
    };
    rec(0);
    return count;
}

// Contents of removable and addable boxes by scanning every position.
inline std::pair<std::vector<int>, std::vector<int>> scan_corners(const std::vector<int>& parts)
{
    auto has = [&](int r, int c) {
        return r >= 0 && c >= 0 && r < static_cast<int>(parts.size()) && c < parts[r];
    };
    std::vector<int> outer, inner;
    int rows = static_cast<int>(parts.size()) + 1;
    int cols = (parts.empty() ? 0 : parts[0]) + 1;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (has(r, c) && !has(r + 1, c) && !has(r, c + 1))
                outer.push_back(c - r);
            if (!has(r, c) && (r == 0 || has(r - 1, c)) && (c == 0 || has(r, c - 1)))
                inner.push_back(c - r);
        }
    std::sort(outer.begin(), outer.end());
    std::sort(inner.begin(), inner.end());
    return {outer, inner};
}

// Last-letter comparison on position lists: at the largest entry whose row
// differs, the filling with the larger row index comes first.
inline bool last_letter_before(const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b)
{
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
        if (a[k].first != b[k].first)
            return a[k].first > b[k].first;
    return false;
}

// Partial permutations as explicit maps.
using PMap = std::map<int, int>;

inline PMap pmap_multiply(const PMap& a, const PMap& b)
{
    PMap ea = a, eb = b;
    for (const auto& [x, y] : b)
        ea.emplace(x, x);
    for (const auto& [x, y] : a)
        eb.emplace(x, x);
    PMap out;
    for (const auto& [x, y] : eb)
        out[x] = ea.at(y);
    return out;
}

// Product of dense row-major matrices.
inline std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, int n)
{
    std::vector<double> c(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int k = 0; k < n; ++k)
                s += a[i * n + k] * b[k * n + j];
            c[i * n + j] = s;
        }
    return c;
}

} // namespace oracle
