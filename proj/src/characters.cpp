#include "symrep/characters.hpp"

#include "symrep/rational_linalg.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace symrep {

namespace {

// shapes up to this size go through the memo
constexpr int memo_max_size = 40;
constexpr std::size_t memo_max_entries = 2'000'000;

struct CharacterMemo {
    std::shared_mutex mutex;
    std::unordered_map<std::string, BigInt> table;
};

CharacterMemo& memo()
{
    static CharacterMemo m;
    return m;
}

std::vector<int> beta_set(const Partition& p)
{
    int len = p.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i)
        beta[i] = p.parts()[i] + (len - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta)
{
    std::sort(beta.rbegin(), beta.rend());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int part = beta[i] - (len - 1 - i);
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(std::move(parts));
}

template <class F>
void for_each_rim_hook(const Partition& p, int k, F&& f)
{
    std::vector<int> beta = beta_set(p);
    // beta is strictly decreasing
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - k;
        if (target < 0)
            continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++between;
        std::vector<int> moved = beta;
        moved[i] = target;
        f(from_beta(std::move(moved)), between % 2 ? -1 : 1);
    }
}

std::string memo_key(const Partition& lambda, const std::vector<int>& lengths)
{
    std::string key = lambda.str();
    key += '|';
    for (int x : lengths) {
        key += std::to_string(x);
        key += ',';
    }
    return key;
}

} // namespace

std::vector<std::pair<Partition, BigInt>> remove_rim_hooks(const Partition& lambda,
                                                           const std::vector<int>& lengths)
{
    int total = 0;
    for (int k : lengths) {
        if (k <= 0)
            throw std::invalid_argument("rim hook length must be positive");
        total += k;
    }
    if (total > lambda.size())
        throw std::invalid_argument("rim hooks larger than the shape");
    std::map<Partition, BigInt> layer{{lambda, BigInt(1)}};
    for (int k : lengths) {
        std::map<Partition, BigInt> next;
        for (const auto& [shape, coeff] : layer)
            for_each_rim_hook(shape, k, [&](Partition q, int sign) { next[std::move(q)] += sign * coeff; });
        layer.clear();
        for (auto& [shape, coeff] : next)
            if (coeff != 0)
                layer.emplace(shape, coeff);
    }
    return {layer.begin(), layer.end()};
}

BigInt character(const Partition& lambda, const CycleType& rho)
{
    if (rho.size() > lambda.size())
        throw std::invalid_argument("character: cycle type larger than the shape");
    std::vector<int> lengths = rho.nontrivial_parts();
    bool use_memo = lambda.size() <= memo_max_size;
    std::string key;
    if (use_memo) {
        key = memo_key(lambda, lengths);
        std::shared_lock lock(memo().mutex);
        auto it = memo().table.find(key);
        if (it != memo().table.end())
            return it->second;
    }
    BigInt value = 0;
    for (const auto& [shape, coeff] : remove_rim_hooks(lambda, lengths))
        value += coeff * dimension(shape);
    if (use_memo) {
        std::unique_lock lock(memo().mutex);
        if (memo().table.size() < memo_max_entries)
            memo().table.emplace(std::move(key), value);
    }
    return value;
}

Rational normalized_character(const Partition& lambda, const CycleType& rho)
{
    if (rho.size() > lambda.size())
        throw std::invalid_argument("normalized_character: cycle type larger than the shape");
    if (lambda.size() <= memo_max_size) {
        Rational r(character(lambda, rho), dimension(lambda));
        r.canonicalize();
        return r;
    }
    Rational value = 0;
    for (const auto& [shape, coeff] : remove_rim_hooks(lambda, rho.nontrivial_parts()))
        value += Rational(coeff) * dimension_ratio(shape, lambda);
    return value;
}

Rational shifted_power_sum(const CycleType& rho, const Partition& lambda)
{
    int n = lambda.size(), r = rho.size();
    if (r > n)
        return 0;
    return Rational(falling_factorial(n, r)) * normalized_character(lambda, rho);
}

std::map<CycleType, Rational> expand_in_shifted_basis(const std::map<Partition, Rational>& values,
                                                      int degree_bound)
{
    if (degree_bound < 0)
        throw std::invalid_argument("negative degree bound");
    std::vector<CycleType> basis;
    for (const auto& p : partitions_up_to(degree_bound)) {
        CycleType rho(p);
        if (rho.kerov_degree() <= degree_bound)
            basis.push_back(rho);
    }
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& [lambda, value] : values) {
        std::vector<Rational> row;
        row.reserve(basis.size());
        for (const auto& rho : basis)
            row.push_back(shifted_power_sum(rho, lambda));
        a.push_back(std::move(row));
        b.push_back(value);
    }
    ExactSolution sol = solve_exact(std::move(a), std::move(b));
    if (sol.status == SolveStatus::inconsistent)
        throw InconsistentSystem("values are not in the span of the filtered shifted basis");
    if (sol.status == SolveStatus::underdetermined)
        throw UnderdeterminedSystem("not enough evaluation points for the requested degree");
    std::map<CycleType, Rational> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (sol.x[i] != 0)
            out.emplace(basis[i], sol.x[i]);
    return out;
}

std::size_t character_cache_size()
{
    std::shared_lock lock(memo().mutex);
    return memo().table.size();
}

} // namespace symrep
