#pragma once

#include "symrep/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symrep {

// Conjugacy class label: a partition rho with multiplicities m_k.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(Partition rho) : rho_(std::move(rho)) {}
    explicit CycleType(std::vector<int> parts) : rho_(std::move(parts)) {}
    static CycleType parse(std::string_view text) { return CycleType(Partition::parse(text)); }

    const Partition& partition() const { return rho_; }
    const std::vector<int>& parts() const { return rho_.parts(); }
    int size() const { return rho_.size(); }
    int length() const { return rho_.length(); }
    int multiplicity(int k) const;

    // prod rho_i * prod m_i!
    BigInt centralizer_order() const;
    // number of permutations of this type in S_{size()}
    BigInt class_size() const;
    // |rho| - m_1
    int weight() const { return size() - multiplicity(1); }
    // |rho| + m_1
    int kerov_degree() const { return size() + multiplicity(1); }
    // |rho| + l(rho)
    int length_degree() const { return size() + length(); }

    // parts different from 1, nonincreasing
    std::vector<int> nontrivial_parts() const;
    CycleType padded(int n) const;
    CycleType without_fixed_points() const;

    std::string str() const { return rho_.str(); }
    bool operator==(const CycleType& o) const { return rho_ == o.rho_; }
    auto operator<=>(const CycleType& o) const { return rho_ <=> o.rho_; }

private:
    Partition rho_;
};

// Bijection of {1..r}; products compose right to left, (a*b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;
    // one-line notation images[i-1] = sigma(i)
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int r);
    static Permutation transposition(int i, int j, int r = 0);
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int r = 0);
    // "(1,2)(3,4)", "(2 4 3)", "id", "()", or one-line "[2,1,4,3]"
    static Permutation parse(std::string_view text, int r = 0);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return i >= 1 && i <= degree() ? images_[i - 1] : i; }
    const std::vector<int>& images() const { return images_; }

    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    Permutation extended(int r) const;

    // nontrivial cycles, each starting at its smallest point
    std::vector<std::vector<int>> cycles() const;
    CycleType cycle_type() const;
    std::vector<int> support() const;
    // largest moved point; 0 for the identity
    int max_moved() const;
    int weight() const { return static_cast<int>(support().size()); }
    int coxeter_length() const;
    // k_1..k_m with sigma = s_{k_1} ... s_{k_m}, s_k = (k,k+1), m = coxeter_length
    std::vector<int> reduced_word() const;

    std::string str() const;
    // equal as permutations of N with finite support
    bool operator==(const Permutation& o) const;

private:
    std::vector<int> images_;
};

// All of S_r in lexicographic one-line order.
std::vector<Permutation> all_permutations(int r);

} // namespace symrep
