#pragma once

#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace symrep {

// (sigma, d) with sigma a bijection of the finite set d of points in 1..15.
// Stored as one nibble per point: the image, or 0 outside d.
class PartialPermutation {
public:
    static constexpr int max_points = 15;

    PartialPermutation() = default;
    // images[i] = sigma(support[i])
    PartialPermutation(const std::vector<int>& support, const std::vector<int>& images);
    // sigma restricted to d; sigma must map d onto itself
    static PartialPermutation restrict(const Permutation& sigma, const std::vector<int>& support);
    static PartialPermutation transposition(int i, int j);
    static PartialPermutation from_key(std::uint64_t key) { PartialPermutation p; p.key_ = key; return p; }

    std::uint64_t key() const { return key_; }
    bool contains(int x) const { return x >= 1 && x <= max_points && image_nibble(x) != 0; }
    int operator()(int x) const { return contains(x) ? image_nibble(x) : x; }
    std::vector<int> support() const;
    // fixed points inside d count as parts equal to 1
    CycleType type() const;
    // (g sigma g^{-1}, g(d))
    PartialPermutation conjugated(const Permutation& g) const;
    std::string str() const;

    bool operator==(const PartialPermutation& o) const { return key_ == o.key_; }
    auto operator<=>(const PartialPermutation& o) const { return key_ <=> o.key_; }

private:
    int image_nibble(int x) const { return static_cast<int>((key_ >> (4 * (x - 1))) & 0xF); }
    std::uint64_t key_ = 0;
};

// Extend both by fixed points to the union of supports and compose right to left.
PartialPermutation pp_multiply(const PartialPermutation& a, const PartialPermutation& b);

struct JmLimits {
    int max_n = PartialPermutation::max_points;
    // pairwise products computed over one whole expansion
    std::size_t max_terms = 5'000'000;
};

struct ExpansionTooLarge : std::length_error {
    using std::length_error::length_error;
};
struct NotInvariant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Finite combination of partial permutations with supports in 1..n.
class FormalSum {
public:
    explicit FormalSum(int n = 0) : n_(n) {}

    static FormalSum unit(int n);

    int n() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    const std::unordered_map<std::uint64_t, Rational>& terms() const { return terms_; }
    Rational coefficient(const PartialPermutation& p) const;

    void add(const PartialPermutation& p, const Rational& c);
    FormalSum operator+(const FormalSum& o) const;
    FormalSum operator-(const FormalSum& o) const;
    FormalSum scaled(const Rational& c) const;
    FormalSum conjugated(const Permutation& g) const;
    bool operator==(const FormalSum& o) const;

private:
    int n_;
    std::unordered_map<std::uint64_t, Rational> terms_;
};

// budget counts pairwise products and is decremented; throws when exhausted
FormalSum multiply(const FormalSum& a, const FormalSum& b, std::size_t* budget = nullptr);

// sum_{j<i} ((j,i), {j,i})
FormalSum jm_element(int i, int n);
// every partial permutation of type rho with support in 1..n
FormalSum alpha_element(const CycleType& rho, int n);

FormalSum power_sum_jm(const CycleType& nu, int n, const JmLimits& limits = {});
// prod_i (p_{nu_i}(xi) - Cat(nu_i/2) (nu_i/2)! alpha_{1^{nu_i/2+1}}), no correction for odd parts
FormalSum modified_power_sum_jm(const CycleType& nu, int n, const JmLimits& limits = {});

using AlphaExpansion = std::map<CycleType, Rational>;

// Coefficient of alpha_rho read off one representative after checking
// that every type class carries a constant coefficient.
AlphaExpansion to_alpha(const FormalSum& x);

// sum_rho c_rho n^{down |rho|} / z_rho chi-hat^lambda_rho, n = |lambda|
Rational phi_n(const AlphaExpansion& x, const Partition& lambda);

BigInt catalan(int k);
// prod_i sum_{boxes} c^{nu_i}
BigInt content_eval(const CycleType& nu, const Partition& lambda);
// prod_i (p_{nu_i}(C) - Cat(nu_i/2) n^{down (nu_i/2+1)} / (nu_i/2+1))
Rational modified_content_eval(const CycleType& nu, const Partition& lambda);
Rational modified_content_power(int k, const Partition& lambda);

} // namespace symrep
