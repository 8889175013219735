#pragma once

#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"
#include "symrep/random.hpp"
#include "symrep/report.hpp"
#include "symrep/seminormal.hpp"
#include "symrep/statistics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symrep {

struct RunConfig {
    std::vector<int> n_values;
    int samples = 2000;
    std::uint64_t seed = 1;
    int jobs = 1;
    SeminormalForm form = SeminormalForm::young;
};

// m = E_r[TS^nu(sigma)], v = C(r,2) E_r[chi-hat^nu_(2) TS^nu(sigma)], young form, exact.
struct MVRecord {
    Permutation sigma;
    Rational m;
    Rational v;
};

MVRecord mv_record(const Permutation& sigma, int r);
// every sigma of S_r in lexicographic one-line order; r <= 6
std::vector<MVRecord> mv_table(int r);

struct AdjacentCheck {
    int r = 0;
    Rational m;
    Rational v;
    bool passed = false;
};
// sigma = (r-1, r): m > 0 and v = 1
AdjacentCheck adjacent_transposition_mv_check(int r);

// probabilists' Hermite polynomial
double hermite(int m, double x);

// Draw i for size n comes from stream (n << 32) | i.
std::vector<Partition> draw_plancherel_samples(int n, int count, std::uint64_t seed, int jobs = 1);

// prod_k k^{m_k/2} H_{m_k}(xi_k) over the parts k >= 2 of rho
double kerov_limit_draw(const CycleType& rho, Rng& rng);
// prod_k k^{m_k} m_k!
double kerov_limit_variance(const CycleType& rho);

// One row per (n, case).  "stat" follows the n^{wt/2} scaling; "stat_sqrt_n"
// is the same quantity with sqrt(n) instead.
struct StatRow {
    int n = 0;
    std::string label;
    Summary stat;
    Summary stat_sqrt_n;
    double limit_mean = 0;
    double limit_variance = 0;
    double ks = 0;
    // experiment specific
    std::vector<std::pair<std::string, double>> extra;
};

std::vector<StatRow> clt_characters(const RunConfig& cfg, const std::vector<CycleType>& rhos);
// stat = n (TS - m); uses the character expansion of TS
std::vector<StatRow> clt_total_sum(const RunConfig& cfg, const std::vector<Permutation>& sigmas);
// stat = n^{wt/2} MT_u; extras: correlation with u n^{wt/2} chi-hat, partial-sum main term moments
std::vector<StatRow> main_term_experiment(const RunConfig& cfg, const std::vector<Permutation>& sigmas,
                                          const std::vector<Rational>& us);
// stat = PS_u itself (no scaling)
std::vector<StatRow> partial_sum_lln(const RunConfig& cfg, const std::vector<Permutation>& sigmas,
                                     const std::vector<Rational>& us);

struct ConjectureRow {
    int n = 0;
    std::optional<Rational> exact;
    double probability = 0;
    int samples = 0;
};

// max over mu inside lambda with |mu| = n - s of dim mu / dim lambda
Rational max_dimension_ratio(const Partition& lambda, int s);
// P(max ratio > n^{-alpha s}); exact mode needs n <= 40
std::vector<ConjectureRow> conjecture_probe(const RunConfig& cfg, double alpha, int s, bool exact);

struct CotransitionRow {
    int n = 0;
    bool exact = false;
    double mean_distance = 0;
    double max_distance = 0;
    // mean |S_ct(3) - semicircle Stieltjes(3)| in scaled coordinates
    double stieltjes_error = 0;
};

// n <= 10 is averaged exactly over the Plancherel ensemble
std::vector<CotransitionRow> cotransition_semicircle(const RunConfig& cfg);

Report mv_table_report(int r);
Report stat_report(const std::string& name, const RunConfig& cfg, const std::vector<StatRow>& rows);
Report conjecture_report(const RunConfig& cfg, double alpha, int s, bool exact,
                         const std::vector<ConjectureRow>& rows);
Report cotransition_report(const RunConfig& cfg, const std::vector<CotransitionRow>& rows);

} // namespace symrep
