#include "symrep/experiments.hpp"

#include "symrep/characters.hpp"
#include "symrep/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace symrep {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();
constexpr int reference_draws = 100000;
constexpr std::uint64_t reference_salt = 0x6c1d2a0e4f3b5977ULL;

int natural_degree(const Permutation& sigma) { return std::max(2, sigma.max_moved()); }

CycleType type_in(const Permutation& sigma, int r)
{
    return sigma.extended(std::max(r, sigma.degree())).cycle_type().without_fixed_points();
}

// Single part k >= 2 with multiplicity one: the limit is N(0, k).
std::optional<double> normal_limit_sd(const CycleType& rho)
{
    auto parts = rho.nontrivial_parts();
    if (parts.size() != 1)
        return std::nullopt;
    return std::sqrt(static_cast<double>(parts[0]));
}

double ks_against_limit(const std::vector<double>& xs, const CycleType& rho, double scale, std::uint64_t seed,
                        std::uint64_t stream)
{
    if (rho.nontrivial_parts().empty() || scale == 0)
        return nan_value;
    if (auto sd = normal_limit_sd(rho))
        return ks_statistic(xs, [s = *sd * scale](double x) { return normal_cdf(x, s); });
    Rng rng(seed ^ reference_salt, stream);
    std::vector<double> ref(reference_draws);
    for (auto& r : ref)
        r = scale * kerov_limit_draw(rho, rng);
    return ks_two_sample(xs, std::move(ref));
}

std::vector<double> scaled_copy(const std::vector<double>& xs, double factor)
{
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        out[i] = xs[i] * factor;
    return out;
}

} // namespace

MVRecord mv_record(const Permutation& sigma, int r)
{
    if (r > 6)
        throw std::invalid_argument("mv_table: r must be at most 6");
    if (sigma.max_moved() > r)
        throw std::invalid_argument("mv_table: permutation outside S_r");
    Permutation s = sigma.extended(r);
    BigInt rfact = factorial(r);
    Rational m = 0, v = 0;
    for (const auto& nu : enumerate_partitions(r)) {
        BigInt d = dimension(nu);
        Rational p(d * d, rfact);
        p.canonicalize();
        Rational ts = total_sum_exact(nu, s);
        m += p * ts;
        if (r >= 2)
            v += p * normalized_character(nu, CycleType(std::vector<int>{2})) * ts;
    }
    v *= r * (r - 1) / 2;
    return {sigma, m, v};
}

std::vector<MVRecord> mv_table(int r)
{
    if (r < 1 || r > 6)
        throw std::invalid_argument("mv_table: r must be in 1..6");
    std::vector<MVRecord> out;
    for (const auto& sigma : all_permutations(r))
        out.push_back(mv_record(sigma, r));
    return out;
}

AdjacentCheck adjacent_transposition_mv_check(int r)
{
    if (r < 3 || r > 6)
        throw std::invalid_argument("adjacent_transposition_mv_check: r must be in 3..6");
    MVRecord rec = mv_record(Permutation::transposition(r - 1, r, r), r);
    return {r, rec.m, rec.v, rec.m > 0 && rec.v == 1};
}

double hermite(int m, double x)
{
    if (m < 0)
        throw std::invalid_argument("hermite: negative degree");
    double prev = 1, cur = x;
    if (m == 0)
        return prev;
    for (int k = 1; k < m; ++k) {
        double next = x * cur - k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<Partition> draw_plancherel_samples(int n, int count, std::uint64_t seed, int jobs)
{
    auto ens = PlancherelEnsemble::sampled(n, seed);
    std::vector<Partition> out(count);
    parallel_for(count, jobs, [&](std::size_t i) {
        out[i] = ens.draw((static_cast<std::uint64_t>(n) << 32) | i);
    });
    return out;
}

double kerov_limit_draw(const CycleType& rho, Rng& rng)
{
    double x = 1;
    for (int k = 2; k <= rho.size(); ++k) {
        int m = rho.multiplicity(k);
        if (m == 0)
            continue;
        x *= std::pow(k, m / 2.0) * hermite(m, rng.normal());
    }
    return x;
}

double kerov_limit_variance(const CycleType& rho)
{
    if (rho.nontrivial_parts().empty())
        return 0;
    double v = 1;
    for (int k = 2; k <= rho.size(); ++k) {
        int m = rho.multiplicity(k);
        v *= std::pow(k, m) * std::tgamma(m + 1.0);
    }
    return v;
}

std::vector<StatRow> clt_characters(const RunConfig& cfg, const std::vector<CycleType>& rhos)
{
    std::vector<StatRow> rows;
    for (int n : cfg.n_values) {
        auto lambdas = draw_plancherel_samples(n, cfg.samples, cfg.seed, cfg.jobs);
        for (std::size_t c = 0; c < rhos.size(); ++c) {
            CycleType rho = rhos[c].without_fixed_points();
            if (rho.size() > n)
                throw std::invalid_argument("clt_characters: cycle type larger than n");
            double scale = std::pow(n, rho.weight() / 2.0);
            std::vector<double> raw(lambdas.size());
            parallel_for(lambdas.size(), cfg.jobs,
                         [&](std::size_t i) { raw[i] = normalized_character(lambdas[i], rho).get_d(); });
            StatRow row;
            row.n = n;
            row.label = rho.size() == 0 ? "id" : rho.str();
            row.stat = summarize(scaled_copy(raw, scale));
            row.stat_sqrt_n = summarize(scaled_copy(raw, std::sqrt(n)));
            bool trivial = rho.nontrivial_parts().empty();
            row.limit_mean = trivial ? 1 : 0;
            row.limit_variance = kerov_limit_variance(rho);
            row.ks = ks_against_limit(scaled_copy(raw, scale), rho, 1.0, cfg.seed, (std::uint64_t(n) << 32) | c);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<StatRow> clt_total_sum(const RunConfig& cfg, const std::vector<Permutation>& sigmas)
{
    std::vector<StatRow> rows;
    for (int n : cfg.n_values) {
        auto lambdas = draw_plancherel_samples(n, cfg.samples, cfg.seed, cfg.jobs);
        for (std::size_t c = 0; c < sigmas.size(); ++c) {
            const Permutation& sigma = sigmas[c];
            int r = natural_degree(sigma);
            if (r > n)
                throw std::invalid_argument("clt_total_sum: permutation outside S_n");
            MVRecord mv = mv_record(sigma, r);
            auto expansion = total_sum_expansion(sigma, cfg.form, r);
            double m = mv.m.get_d(), v = mv.v.get_d();
            std::vector<double> dev(lambdas.size());
            parallel_for(lambdas.size(), cfg.jobs,
                         [&](std::size_t i) { dev[i] = expansion.evaluate(lambdas[i]) - m; });
            StatRow row;
            row.n = n;
            row.label = sigma.str();
            row.stat = summarize(scaled_copy(dev, n));
            row.stat_sqrt_n = summarize(scaled_copy(dev, std::sqrt(n)));
            row.limit_mean = 0;
            row.limit_variance = 2 * v * v;
            row.ks = v == 0 ? nan_value
                            : ks_statistic(scaled_copy(dev, n),
                                           [sd = std::sqrt(2.0) * std::abs(v)](double x) { return normal_cdf(x, sd); });
            row.extra = {{"m", m}, {"v", v}};
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<StatRow> main_term_experiment(const RunConfig& cfg, const std::vector<Permutation>& sigmas,
                                          const std::vector<Rational>& us)
{
    std::vector<StatRow> rows;
    for (int n : cfg.n_values) {
        auto lambdas = draw_plancherel_samples(n, cfg.samples, cfg.seed, cfg.jobs);
        std::size_t c = 0;
        for (const auto& sigma : sigmas) {
            int r = natural_degree(sigma);
            if (r > n - 1)
                throw std::invalid_argument("main_term_experiment: permutation must lie in S_{n-1}");
            CycleType rho = type_in(sigma, r);
            MVRecord mv = mv_record(sigma, r);
            auto expansion = total_sum_expansion(sigma, cfg.form, r);
            double scale = std::pow(n, rho.weight() / 2.0);
            for (const auto& u : us) {
                if (u < 0 || u > 1)
                    throw std::invalid_argument("main_term_experiment: u outside [0,1]");
                double ud = u.get_d();
                std::vector<double> mt(lambdas.size()), full(lambdas.size()), ms(lambdas.size());
                parallel_for(lambdas.size(), cfg.jobs, [&](std::size_t i) {
                    const Partition& lambda = lambdas[i];
                    auto subs = subpartitions(lambda);
                    int bar = u == 1 ? static_cast<int>(subs.size()) + 1 : quantile_ct(lambda, u).bar_j;
                    double t = 0, s = 0;
                    for (int j = 1; j < bar; ++j) {
                        const Partition& mu = subs[j - 1].shape;
                        double w = dimension_ratio(mu, lambda).get_d();
                        t += w * normalized_character(mu, rho).get_d();
                        s += w * expansion.evaluate(mu);
                    }
                    mt[i] = t;
                    ms[i] = s;
                    full[i] = normalized_character(lambda, rho).get_d();
                });
                StatRow row;
                row.n = n;
                row.label = sigma.str() + " u=" + to_string(u);
                auto stat = scaled_copy(mt, scale);
                row.stat = summarize(stat);
                row.stat_sqrt_n = summarize(scaled_copy(mt, std::sqrt(n)));
                row.limit_mean = rho.nontrivial_parts().empty() ? ud : 0;
                row.limit_variance = ud * ud * kerov_limit_variance(rho);
                row.ks = ks_against_limit(stat, rho, ud, cfg.seed, (std::uint64_t(n) << 32) | c);
                std::vector<double> target(full.size());
                for (std::size_t i = 0; i < full.size(); ++i)
                    target[i] = ud * scale * full[i];
                double corr = row.stat.variance > 0 ? correlation(stat, target) : nan_value;
                double um = ud * mv.m.get_d();
                std::vector<double> ms_dev(ms.size());
                for (std::size_t i = 0; i < ms.size(); ++i)
                    ms_dev[i] = n * (ms[i] - um);
                Summary ms_sum = summarize(ms);
                double v = mv.v.get_d();
                row.extra = {{"correlation", corr},
                             {"ms_mean", ms_sum.mean},
                             {"ms_target_mean", um},
                             {"ms_n_variance", summarize(ms_dev).variance},
                             {"ms_target_variance", 2 * ud * ud * v * v}};
                rows.push_back(std::move(row));
                ++c;
            }
        }
    }
    return rows;
}

std::vector<StatRow> partial_sum_lln(const RunConfig& cfg, const std::vector<Permutation>& sigmas,
                                     const std::vector<Rational>& us)
{
    SeminormalOptions opt;
    opt.form = cfg.form;
    std::vector<StatRow> rows;
    for (int n : cfg.n_values) {
        auto lambdas = draw_plancherel_samples(n, cfg.samples, cfg.seed, cfg.jobs);
        for (const auto& sigma : sigmas) {
            int r = natural_degree(sigma);
            if (r > n - 1)
                throw std::invalid_argument("partial_sum_lln: permutation must lie in S_{n-1}");
            MVRecord mv = mv_record(sigma, r);
            for (const auto& u : us) {
                std::vector<double> ps(lambdas.size());
                parallel_for(lambdas.size(), cfg.jobs,
                             [&](std::size_t i) { ps[i] = partial_sum(lambdas[i], sigma, u, opt); });
                StatRow row;
                row.n = n;
                row.label = sigma.str() + " u=" + to_string(u);
                row.stat = summarize(ps);
                row.limit_mean = Rational(u * mv.m).get_d();
                row.limit_variance = 0;
                row.ks = nan_value;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

Rational max_dimension_ratio(const Partition& lambda, int s)
{
    if (s < 0 || s > lambda.size())
        throw std::invalid_argument("max_dimension_ratio: bad s");
    std::set<Partition> level{lambda};
    for (int k = 0; k < s; ++k) {
        std::set<Partition> next;
        for (const auto& p : level)
            for (auto& sub : subpartitions(p))
                next.insert(std::move(sub.shape));
        level = std::move(next);
    }
    Rational best = 0;
    for (const auto& mu : level)
        best = std::max(best, dimension_ratio(mu, lambda));
    return best;
}

std::vector<ConjectureRow> conjecture_probe(const RunConfig& cfg, double alpha, int s, bool exact)
{
    std::vector<ConjectureRow> rows(cfg.n_values.size());
    for (int n : cfg.n_values) {
        if (n < s || n < 1)
            throw std::invalid_argument("conjecture_probe: n must be at least max(s, 1)");
        if (exact && n > 40)
            throw std::invalid_argument("conjecture_probe: exact mode is capped at n = 40");
    }
    auto one = [&](std::size_t idx) {
        int n = cfg.n_values[idx];
        double threshold = std::pow(static_cast<double>(n), -alpha * s);
        ConjectureRow row;
        row.n = n;
        if (exact) {
            BigInt nfact = factorial(n);
            Rational total = 0;
            for_each_partition(n, [&](const Partition& lambda) {
                if (max_dimension_ratio(lambda, s).get_d() > threshold) {
                    BigInt d = dimension(lambda);
                    Rational p(d * d, nfact);
                    p.canonicalize();
                    total += p;
                }
            });
            row.exact = total;
            row.probability = total.get_d();
        } else {
            auto lambdas = draw_plancherel_samples(n, cfg.samples, cfg.seed, 1);
            int hits = 0;
            for (const auto& lambda : lambdas)
                hits += max_dimension_ratio(lambda, s).get_d() > threshold;
            row.samples = cfg.samples;
            row.probability = cfg.samples > 0 ? double(hits) / cfg.samples : nan_value;
        }
        rows[idx] = std::move(row);
    };
    parallel_for(cfg.n_values.size(), cfg.jobs, one);
    return rows;
}

std::vector<CotransitionRow> cotransition_semicircle(const RunConfig& cfg)
{
    const double probe = 3.0;
    const double target = semicircle_stieltjes(probe);
    std::vector<CotransitionRow> rows;
    for (int n : cfg.n_values) {
        CotransitionRow row;
        row.n = n;
        if (n <= 10) {
            row.exact = true;
            auto ens = PlancherelEnsemble::exact(n);
            for (const auto& [lambda, p] : ens.support()) {
                double d = sup_distance_to_semicircle(co_transition_cdf(lambda));
                double w = p.get_d();
                row.mean_distance += w * d;
                row.max_distance = std::max(row.max_distance, d);
                row.stieltjes_error += w * std::abs(stieltjes_ct(lambda, probe, Scaling::scaled).sum_form - target);
            }
        } else {
            auto lambdas = draw_plancherel_samples(n, cfg.samples, cfg.seed, cfg.jobs);
            std::vector<double> dist(lambdas.size()), err(lambdas.size());
            parallel_for(lambdas.size(), cfg.jobs, [&](std::size_t i) {
                dist[i] = sup_distance_to_semicircle(co_transition_cdf(lambdas[i]));
                err[i] = std::abs(stieltjes_ct(lambdas[i], probe, Scaling::scaled).sum_form - target);
            });
            Summary sd = summarize(dist);
            row.mean_distance = sd.mean;
            row.max_distance = sd.max;
            row.stieltjes_error = summarize(err).mean;
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string join_ints(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

void common_config(Report& rep, const RunConfig& cfg)
{
    rep.seed = cfg.seed;
    rep.config.emplace_back("n", join_ints(cfg.n_values));
    rep.config.emplace_back("samples", std::to_string(cfg.samples));
    rep.config.emplace_back("jobs", std::to_string(cfg.jobs));
    rep.config.emplace_back("form", to_string(cfg.form));
}

} // namespace

Report mv_table_report(int r)
{
    Report rep;
    rep.name = "mv-table";
    rep.config.emplace_back("r", std::to_string(r));
    rep.columns = {"sigma", "m", "v"};
    for (const auto& rec : mv_table(r))
        rep.rows.push_back({rec.sigma.str(), to_string(rec.m), to_string(rec.v)});
    return rep;
}

Report stat_report(const std::string& name, const RunConfig& cfg, const std::vector<StatRow>& rows)
{
    Report rep;
    rep.name = name;
    common_config(rep, cfg);
    bool with_sqrt = std::any_of(rows.begin(), rows.end(), [](const StatRow& r) { return r.stat_sqrt_n.count > 0; });
    rep.columns = {"n", "case", "count", "mean", "variance", "min", "max", "max_abs"};
    if (with_sqrt)
        for (const char* c : {"sqrt_n_mean", "sqrt_n_variance", "sqrt_n_max_abs"})
            rep.columns.emplace_back(c);
    for (const char* c : {"limit_mean", "limit_variance", "ks"})
        rep.columns.emplace_back(c);
    if (!rows.empty())
        for (const auto& [k, v] : rows.front().extra)
            rep.columns.push_back(k);
    for (const auto& r : rows) {
        std::vector<ReportCell> line{(long long)r.n, r.label, (long long)r.stat.count, r.stat.mean, r.stat.variance,
                                     r.stat.min, r.stat.max, r.stat.max_abs};
        if (with_sqrt) {
            line.emplace_back(r.stat_sqrt_n.mean);
            line.emplace_back(r.stat_sqrt_n.variance);
            line.emplace_back(r.stat_sqrt_n.max_abs);
        }
        line.emplace_back(r.limit_mean);
        line.emplace_back(r.limit_variance);
        line.emplace_back(r.ks);
        for (const auto& [k, v] : r.extra)
            line.emplace_back(v);
        rep.rows.push_back(std::move(line));
    }
    return rep;
}

Report conjecture_report(const RunConfig& cfg, double alpha, int s, bool exact, const std::vector<ConjectureRow>& rows)
{
    Report rep;
    rep.name = "conjecture";
    common_config(rep, cfg);
    rep.config.emplace_back("alpha", std::to_string(alpha));
    rep.config.emplace_back("s", std::to_string(s));
    rep.config.emplace_back("mode", exact ? "exact" : "mc");
    rep.columns = {"n", "threshold", "probability", "exact", "samples"};
    for (const auto& r : rows)
        rep.rows.push_back({(long long)r.n, std::pow(double(r.n), -alpha * s), r.probability,
                            r.exact ? to_string(*r.exact) : std::string(), (long long)r.samples});
    return rep;
}

Report cotransition_report(const RunConfig& cfg, const std::vector<CotransitionRow>& rows)
{
    Report rep;
    rep.name = "cotransition";
    common_config(rep, cfg);
    rep.columns = {"n", "exact", "mean_sup_distance", "max_sup_distance", "stieltjes_error_u3"};
    for (const auto& r : rows)
        rep.rows.push_back({(long long)r.n, r.exact, r.mean_distance, r.max_distance, r.stieltjes_error});
    return rep;
}

} // namespace symrep
