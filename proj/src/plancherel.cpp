#include "symrep/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace symrep {

Rational plancherel_pmf(const Partition& lambda)
{
    BigInt d = dimension(lambda);
    Rational r(d * d, factorial(lambda.size()));
    r.canonicalize();
    return r;
}

Partition sample_plancherel(int n, Rng& rng)
{
    if (n < 0)
        throw std::invalid_argument("sample_plancherel: negative size");
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    std::vector<std::vector<int>> rows;
    for (int x : word) {
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);
        }
    }
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

Partition sample_plancherel_growth(int n, Rng& rng)
{
    Partition lambda;
    for (int m = 0; m < n; ++m) {
        auto ups = superpartitions(lambda);
        double u = rng.uniform();
        double acc = 0;
        std::size_t pick = ups.size() - 1;
        for (std::size_t j = 0; j < ups.size(); ++j) {
            // dim Lambda_j / ((m+1) dim lambda)
            Rational w = 1 / (Rational(m + 1) * dimension_ratio(lambda, ups[j].shape));
            acc += w.get_d();
            if (u < acc) {
                pick = j;
                break;
            }
        }
        lambda = ups[pick].shape;
    }
    return lambda;
}

PlancherelEnsemble PlancherelEnsemble::exact(int n)
{
    PlancherelEnsemble e;
    e.n_ = n;
    e.exact_ = true;
    for_each_partition(n, [&](const Partition& p) { e.support_.push_back({p, plancherel_pmf(p)}); });
    return e;
}

PlancherelEnsemble PlancherelEnsemble::sampled(int n, std::uint64_t seed)
{
    PlancherelEnsemble e;
    e.n_ = n;
    e.seed_ = seed;
    return e;
}

Partition PlancherelEnsemble::draw(std::uint64_t index) const
{
    if (exact_)
        throw std::logic_error("draw() on an exact ensemble");
    Rng rng(seed_, index);
    return sample_plancherel(n_, rng);
}

double StepDistribution::operator()(double v) const
{
    double f = 0;
    for (std::size_t j = 0; j < jump_points.size(); ++j)
        if (jump_points[j] <= v)
            f = cumulative_weights[j].get_d();
    return f;
}

namespace {

StepDistribution make_step(const std::vector<int>& contents, std::vector<Rational> weights, int n)
{
    StepDistribution s;
    double scale = n > 0 ? std::sqrt(static_cast<double>(n)) : 1.0;
    Rational acc = 0;
    for (std::size_t j = 0; j < contents.size(); ++j) {
        s.jump_points.push_back(contents[j] / scale);
        acc += weights[j];
        s.cumulative_weights.push_back(acc);
    }
    s.contents = contents;
    s.weights = std::move(weights);
    return s;
}

} // namespace

StepDistribution co_transition_cdf(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("co_transition_cdf: empty partition");
    std::vector<int> contents;
    std::vector<Rational> weights;
    for (auto& sub : subpartitions(lambda)) {
        contents.push_back(sub.content);
        weights.push_back(dimension_ratio(sub.shape, lambda));
    }
    return make_step(contents, std::move(weights), lambda.size());
}

StepDistribution transition_cdf(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("transition_cdf: empty partition");
    std::vector<int> contents;
    std::vector<Rational> weights;
    for (auto& up : superpartitions(lambda)) {
        contents.push_back(up.content);
        weights.push_back(1 / (Rational(lambda.size() + 1) * dimension_ratio(lambda, up.shape)));
    }
    return make_step(contents, std::move(weights), lambda.size());
}

Quantile quantile_ct(const Partition& lambda, const Rational& u)
{
    if (u < 0 || u > 1)
        throw std::invalid_argument("quantile_ct: u outside [0,1]");
    StepDistribution f = co_transition_cdf(lambda);
    int d = static_cast<int>(f.jump_points.size());
    int bar = d;
    if (u != 1) {
        for (int j = 0; j < d; ++j)
            if (f.cumulative_weights[j] > u) {
                bar = j + 1;
                break;
            }
    }
    return {f.jump_points[bar - 1], bar};
}

Quantile quantile_ct(const Partition& lambda, double u) { return quantile_ct(lambda, rational_from_double(u)); }

namespace {

double checked_inverse(double x)
{
    if (x == 0.0)
        throw std::domain_error("Stieltjes transform evaluated at a pole");
    return 1.0 / x;
}

// prod (u - a_i / scale) / prod (u - b_j / scale)
double poly_ratio(double u, const std::vector<int>& a, const std::vector<int>& b, double scale = 1)
{
    double r = 1;
    std::size_t i = 0, j = 0;
    // interleave to keep the running value moderate
    while (i < a.size() || j < b.size()) {
        if (i < a.size())
            r *= (u - a[i++] / scale);
        if (j < b.size())
            r *= checked_inverse(u - b[j++] / scale);
    }
    return r;
}

} // namespace

StieltjesValue stieltjes_ct(const Partition& lambda, double u, Scaling scaling)
{
    StepDistribution f = co_transition_cdf(lambda);
    CornerData c = corners(lambda);
    double n = lambda.size();
    StieltjesValue out;
    if (scaling == Scaling::unscaled) {
        for (std::size_t j = 0; j < f.contents.size(); ++j)
            out.sum_form += f.weights[j].get_d() * checked_inverse(u - f.contents[j]);
        out.rational_form = (u - poly_ratio(u, c.inner_contents, c.outer_contents)) / n;
    } else {
        for (std::size_t j = 0; j < f.contents.size(); ++j)
            out.sum_form += f.weights[j].get_d() * checked_inverse(u - f.jump_points[j]);
        out.rational_form = u - poly_ratio(u, c.inner_contents, c.outer_contents, std::sqrt(n));
    }
    return out;
}

StieltjesValue stieltjes_tr(const Partition& lambda, double u, Scaling scaling)
{
    StepDistribution f = transition_cdf(lambda);
    CornerData c = corners(lambda);
    double scale = scaling == Scaling::unscaled ? 1.0 : std::sqrt(static_cast<double>(lambda.size()));
    StieltjesValue out;
    for (std::size_t j = 0; j < f.contents.size(); ++j)
        out.sum_form += f.weights[j].get_d() * checked_inverse(u - f.contents[j] / scale);
    out.rational_form = poly_ratio(u, c.outer_contents, c.inner_contents, scale);
    return out;
}

double semicircle_cdf(double v)
{
    if (v <= -2)
        return 0;
    if (v >= 2)
        return 1;
    return 0.5 + v * std::sqrt(4 - v * v) / (4 * std::numbers::pi) + std::asin(v / 2) / std::numbers::pi;
}

double semicircle_stieltjes(double u)
{
    if (std::abs(u) <= 2)
        throw std::domain_error("semicircle Stieltjes transform needs |u| > 2");
    double root = std::sqrt(u * u - 4);
    return u > 0 ? (u - root) / 2 : (u + root) / 2;
}

double sup_distance_to_semicircle(const StepDistribution& f)
{
    double best = 0;
    double before = 0;
    for (std::size_t j = 0; j < f.jump_points.size(); ++j) {
        double g = semicircle_cdf(f.jump_points[j]);
        double after = f.cumulative_weights[j].get_d();
        best = std::max({best, std::abs(g - before), std::abs(g - after)});
        before = after;
    }
    return best;
}

} // namespace symrep
