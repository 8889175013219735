#pragma once

#include "symrep/partition.hpp"
#include "symrep/random.hpp"

#include <cstdint>
#include <vector>

namespace symrep {

// (dim lambda)^2 / n!
Rational plancherel_pmf(const Partition& lambda);

// Shape of the RSK insertion tableau of a uniform permutation.
Partition sample_plancherel(int n, Rng& rng);
// Grows one box at a time with the transition probabilities; slow, for checks.
Partition sample_plancherel_growth(int n, Rng& rng);

class PlancherelEnsemble {
public:
    struct Weighted {
        Partition shape;
        Rational probability;
    };

    static PlancherelEnsemble exact(int n);
    static PlancherelEnsemble sampled(int n, std::uint64_t seed);

    int n() const { return n_; }
    bool is_exact() const { return exact_; }
    std::uint64_t seed() const { return seed_; }
    // exact mode only
    const std::vector<Weighted>& support() const { return support_; }
    // sampled mode: draw i comes from its own stream, independent of order
    Partition draw(std::uint64_t index) const;

private:
    int n_ = 0;
    bool exact_ = false;
    std::uint64_t seed_ = 0;
    std::vector<Weighted> support_;
};

// Right-continuous step CDF.  Points are already divided by sqrt(n).
struct StepDistribution {
    std::vector<double> jump_points;
    std::vector<Rational> weights;
    std::vector<Rational> cumulative_weights;
    std::vector<int> contents;

    double operator()(double v) const;
};

StepDistribution co_transition_cdf(const Partition& lambda);
StepDistribution transition_cdf(const Partition& lambda);

struct Quantile {
    double v = 0;
    // 1-based index of the selected subpartition
    int bar_j = 1;
};

// v = y_{bar_j}/sqrt(n) where bar_j is the first j whose cumulative weight
// exceeds u; u = 1 selects the last corner.
Quantile quantile_ct(const Partition& lambda, const Rational& u);
Quantile quantile_ct(const Partition& lambda, double u);

enum class Scaling { unscaled, scaled };

struct StieltjesValue {
    double sum_form = 0;
    double rational_form = 0;
};

// sum_j w_j / (u - y_j) against the rational form built from the monic
// polynomials P, Q vanishing at the inner and outer points.  Scaled mode
// divides every content by sqrt(n) and the rational form is u - P(u)/Q(u);
// with raw contents it is (u - P(u)/Q(u)) / n.  Throws std::domain_error at a pole.
StieltjesValue stieltjes_ct(const Partition& lambda, double u, Scaling scaling = Scaling::unscaled);
// sum_i w_i / (u - x_i) against Q(u)/P(u), in either scaling.
StieltjesValue stieltjes_tr(const Partition& lambda, double u, Scaling scaling = Scaling::unscaled);

// Semicircle law on [-2, 2]; clamps outside.
double semicircle_cdf(double v);
// (u - sqrt(u^2 - 4))/2 for |u| > 2
double semicircle_stieltjes(double u);

// sup_v |F(v) - semicircle_cdf(v)|, attained at a jump.
double sup_distance_to_semicircle(const StepDistribution& f);

} // namespace symrep
