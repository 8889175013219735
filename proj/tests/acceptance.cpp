// One line per acceptance criterion.  Exit status is 0 when the set of
// failing criteria equals the --known-failures list (default: none).

#include "symrep/experiments.hpp"
#include "symrep/identities.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace symrep;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
    std::vector<std::string> info;
};

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

const IdentityResult* find(const std::vector<IdentityResult>& rs, const std::string& name)
{
    for (const auto& r : rs)
        if (r.name == name)
            return &r;
    return nullptr;
}

bool all_passed(const std::vector<IdentityResult>& rs, std::string& first_failure)
{
    for (const auto& r : rs)
        if (!r.passed) {
            first_failure = r.name + ": " + r.note;
            return false;
        }
    return true;
}

Outcome s4_constants()
{
    static const char* want[][3] = {
        {"id", "1", "0"},           {"(3,4)", "1/2", "1"},         {"(2,3)", "2/3", "1"},
        {"(2,3,4)", "5/12", "1/2"}, {"(2,4,3)", "1/6", "4/3"},     {"(2,4)", "-1/4", "13/6"},
        {"(1,2)", "0", "1"},        {"(1,2)(3,4)", "0", "1"},      {"(1,2,3)", "1/3", "0"},
        {"(1,2,3,4)", "1/3", "0"},  {"(1,2,4,3)", "1/3", "2/3"},   {"(1,2,4)", "0", "1/3"},
        {"(1,3,2)", "-1/3", "0"},   {"(1,3,4,2)", "-1/12", "1/2"}, {"(1,3)", "-2/3", "1"},
        {"(1,3,4)", "-1/6", "0"},   {"(1,3)(2,4)", "7/12", "-7/6"}, {"(1,3,2,4)", "1/6", "-1/3"},
        {"(1,4,3,2)", "-1/12", "-7/6"}, {"(1,4,2)", "0", "-4/3"},  {"(1,4,3)", "-5/12", "-5/6"},
        {"(1,4)", "-1/4", "-1/6"},  {"(1,4,2,3)", "-2/3", "1/3"},  {"(1,4)(2,3)", "-7/12", "1/6"},
    };
    auto table = mv_table(4);
    int matched = 0;
    for (const auto& row : want)
        for (const auto& rec : table)
            if (rec.sigma == Permutation::parse(row[0]) && rec.m == parse_rational(row[1]) &&
                rec.v == parse_rational(row[2]))
                ++matched;
    return {matched == 24 && table.size() == 24, std::to_string(matched) + "/24 rows match", {}};
}

Outcome orthogonal_matrix()
{
    const double r89 = std::sqrt(8.0 / 9), r34 = std::sqrt(3.0 / 4), r29 = std::sqrt(2.0 / 9),
                 r23 = std::sqrt(2.0 / 3), r112 = std::sqrt(1.0 / 12);
    const double want[5][5] = {{-1.0 / 3, -r29, r23, 0, 0},
                               {r89, -1.0 / 6, r112, 0, 0},
                               {0, r34, 0.5, 0, 0},
                               {0, 0, 0, -0.5, r34},
                               {0, 0, 0, -r34, -0.5}};
    auto m = rep_matrix(Partition::parse("3,2"), Permutation::parse("(2,4,3)"));
    double err = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            err = std::max(err, std::abs(m(i, j) - want[i][j]));
    return {m.dimension() == 5 && err <= 1e-12, "max entry error " + fmt("%.2e", err), {}};
}

Outcome identity_suite()
{
    auto rs = run_identity_suite(8, 1);
    std::string bad;
    bool ok = all_passed(rs, bad);
    std::size_t cases = 0;
    for (const auto& r : rs)
        cases += r.cases;
    return {ok, std::to_string(rs.size()) + " identities, " + std::to_string(cases) + " cases" +
                    (ok ? "" : "; first failure " + bad),
            {}};
}

Outcome jm_algebra()
{
    auto rs = run_jm_suite(7, 10, 6);
    Outcome o;
    o.passed = true;
    std::ostringstream d;
    for (const char* name : {"jucys_content_identity", "catalan_coefficients", "modified_recurrence_plus"}) {
        const auto* r = find(rs, name);
        bool ok = r && r->passed;
        o.passed = o.passed && ok;
        d << name << (ok ? " ok" : " FAILED") << "; ";
        if (r && !r->passed)
            o.info.push_back(std::string(name) + " first counterexample: " + r->note);
    }
    o.detail = d.str();
    if (const auto* minus = find(rs, "modified_recurrence_minus"))
        o.info.push_back(std::string("recurrence with the Catalan term subtracted: ") +
                         (minus->passed ? "holds" : "fails") + " on " + std::to_string(minus->cases) + " cases");
    return o;
}

Outcome shifted_products()
{
    auto rs = run_shifted_product_suite();
    std::string bad;
    bool ok = all_passed(rs, bad);
    return {ok, ok ? "leading coefficients confirmed" : bad, {}};
}

Outcome conjecture()
{
    RunConfig cfg;
    for (int n = 7; n <= 40; ++n)
        cfg.n_values.push_back(n);
    auto rows = conjecture_probe(cfg, 0.2, 1, true);
    double worst7 = 0, worst12 = 0, worst37 = 0;
    for (const auto& r : rows) {
        worst7 = std::max(worst7, r.probability);
        if (r.n >= 12)
            worst12 = std::max(worst12, r.probability);
        if (r.n >= 37)
            worst37 = std::max(worst37, r.probability);
    }
    bool ok = rows.size() == 34 && worst7 <= 0.2 && worst12 <= 0.1 && worst37 <= 0.05;
    return {ok,
            "max probability " + fmt("%.4f", worst7) + " (n>=7), " + fmt("%.4f", worst12) + " (n>=12), " +
                fmt("%.4f", worst37) + " (n>=37)",
            {}};
}

Outcome statistics()
{
    RunConfig cfg;
    cfg.n_values = {400};
    cfg.samples = 2000;
    cfg.seed = 1;
    auto chars = clt_characters(cfg, {CycleType::parse("2")});
    auto ts = clt_total_sum(cfg, {Permutation::parse("(1,2)")});
    auto mt = main_term_experiment(cfg, {Permutation::parse("(1,2)")}, {Rational(1, 2)});

    RunConfig ladder = cfg;
    ladder.n_values = {100, 400, 1600};
    auto deg = clt_total_sum(ladder, {Permutation::parse("(1,2,3)")});

    double va = chars[0].stat_sqrt_n.variance, vb = ts[0].stat_sqrt_n.variance, vc = mt[0].stat_sqrt_n.variance;
    bool a = va >= 1.8 && va <= 2.2, b = vb >= 1.8 && vb <= 2.2, c = vc >= 0.4 && vc <= 0.6;
    bool d = deg.size() == 3 && deg[0].stat_sqrt_n.max_abs > deg[1].stat_sqrt_n.max_abs &&
             deg[1].stat_sqrt_n.max_abs > deg[2].stat_sqrt_n.max_abs;

    Outcome o;
    o.passed = a && b && c && d;
    o.detail = std::string("(a) ") + (a ? "ok " : "FAILED ") + fmt("%.4f", va) + "; (b) " + (b ? "ok " : "FAILED ") +
               fmt("%.4f", vb) + "; (c) " + (c ? "ok " : "FAILED ") + fmt("%.5f", vc) + "; (d) " +
               (d ? "ok " : "FAILED ");
    if (deg.size() == 3)
        o.detail += fmt("%.4g", deg[0].stat_sqrt_n.max_abs) + " > " + fmt("%.4g", deg[1].stat_sqrt_n.max_abs) +
                    " > " + fmt("%.4g", deg[2].stat_sqrt_n.max_abs);
    o.info.push_back("with the n^{wt/2} scaling: var(n chi-hat_(2)) = " + fmt("%.4f", chars[0].stat.variance) +
                     ", var(n (TS - m)) = " + fmt("%.4f", ts[0].stat.variance) + ", var(n MT_1/2) = " +
                     fmt("%.4f", mt[0].stat.variance) + " (bands [1.8,2.2], [1.8,2.2], [0.4,0.6])");
    return o;
}

Outcome semicircle()
{
    RunConfig cfg;
    cfg.n_values = {2000};
    cfg.samples = 50;
    cfg.seed = 1;
    auto rows = cotransition_semicircle(cfg);
    double dist = rows.at(0).mean_distance;
    auto rs = run_stieltjes_suite(10, 20, 1);
    const auto* ct = find(rs, "stieltjes_cotransition/scaled");
    bool ok = dist < 0.05 && ct && ct->passed;
    Outcome o{ok,
              "mean sup distance " + fmt("%.4f", dist) + "; u - P/Q identity " +
                  (ct && ct->passed ? "holds" : "FAILED") + " (max error " + fmt("%.1e", ct ? ct->max_error : NAN) +
                  ", " + std::to_string(ct ? ct->cases : 0) + " cases)",
              {}};
    for (const auto& r : rs)
        if (r.name != "stieltjes_cotransition/scaled")
            o.info.push_back(r.name + ": " + (r.passed ? "holds" : "fails") + ", max error " + fmt("%.1e", r.max_error));
    return o;
}

Outcome partial_sums()
{
    RunConfig cfg;
    cfg.n_values = {40};
    cfg.samples = 500;
    cfg.seed = 1;
    auto rows = partial_sum_lln(cfg, {Permutation::parse("(1,2)"), Permutation()}, {Rational(1, 2)});
    double m12 = rows.at(0).stat.mean, mid = rows.at(1).stat.mean;
    bool ok = std::abs(m12) <= 0.05 && std::abs(mid - 0.5) <= 0.02;
    return {ok, "mean PS (1,2) " + fmt("%.4f", m12) + ", mean PS id " + fmt("%.4f", mid), {}};
}

} // namespace

int main(int argc, char** argv)
{
    std::set<int> known;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--known-failures") {
            std::stringstream ss(argv[i + 1]);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty())
                    known.insert(std::stoi(item));
        }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"S4 (m, v) table", s4_constants},
        {"orthogonal matrix of (2,4,3)", orthogonal_matrix},
        {"identity suite, n <= 8", identity_suite},
        {"Jucys-Murphy algebra", jm_algebra},
        {"shifted power-sum products", shifted_products},
        {"conjecture thresholds", conjecture},
        {"statistical suite, n = 400, N = 2000", statistics},
        {"semicircle and Stieltjes identity", semicircle},
        {"partial sum law of large numbers", partial_sums},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), {}};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        int id = static_cast<int>(i) + 1;
        if (!o.passed)
            failed.insert(id);
        std::printf("[%s] %d. %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        for (const auto& line : o.info)
            std::printf("       info: %s\n", line.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (failed != known) {
        std::printf("failing set differs from --known-failures\n");
        return 1;
    }
    return 0;
}
