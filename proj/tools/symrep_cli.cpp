#include "symrep/experiments.hpp"
#include "symrep/identities.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>

using namespace symrep;

namespace {

struct Common {
    std::vector<std::string> n;
    int samples = 0;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string out;
    std::string format = "csv";
    std::string form = "young";
    std::vector<std::string> sigma;
    std::vector<std::string> u;
};

// "7..40" expands to the whole range
std::vector<int> expand_n(const std::vector<std::string>& items)
{
    std::vector<int> out;
    for (const auto& s : items) {
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(s));
            continue;
        }
        int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
        for (int i = lo; i <= hi; ++i)
            out.push_back(i);
    }
    return out;
}

RunConfig config_of(const Common& c)
{
    RunConfig cfg;
    cfg.n_values = expand_n(c.n);
    cfg.samples = c.samples;
    cfg.seed = c.seed;
    cfg.jobs = c.jobs;
    cfg.form = parse_form(c.form);
    return cfg;
}

std::vector<Permutation> sigmas_of(const Common& c)
{
    std::vector<Permutation> out;
    for (const auto& s : c.sigma)
        out.push_back(Permutation::parse(s));
    return out;
}

std::vector<Rational> us_of(const Common& c)
{
    std::vector<Rational> out;
    for (const auto& s : c.u)
        out.push_back(parse_rational(s));
    return out;
}

void emit(const Report& rep, const Common& c)
{
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file)
            throw std::runtime_error("cannot open " + c.out);
        os = &file;
    }
    if (c.format == "json")
        write_json(rep, *os);
    else
        write_csv(rep, *os);
}

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Common& c,
                      std::vector<std::string> n, int samples, bool with_sigma = false,
                      std::vector<std::string> sigma = {}, bool with_u = false, std::vector<std::string> u = {})
{
    CLI::App* sub = app.add_subcommand(name, help);
    c.n = std::move(n);
    c.samples = samples;
    c.sigma = std::move(sigma);
    c.u = std::move(u);
    sub->add_option("--n", c.n, "sizes, comma separated; a..b for a range")->delimiter(',')->capture_default_str();
    sub->add_option("--samples", c.samples, "Plancherel samples per size")->capture_default_str();
    sub->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--form", c.form, "seminormal form: young or orthogonal")
        ->check(CLI::IsMember({"young", "orthogonal"}))
        ->capture_default_str();
    if (with_sigma)
        sub->add_option("--sigma", c.sigma, "permutations, ';' separated, e.g. \"(1,2);(1,2,3)\"")
            ->delimiter(';')
            ->capture_default_str();
    if (with_u)
        sub->add_option("--u", c.u, "levels in [0,1], comma separated, decimals or fractions")
            ->delimiter(',')
            ->capture_default_str();
    return sub;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Representation-theoretic functionals of the symmetric group"};
    app.require_subcommand(1);

    int mv_r = 4;
    auto* mv = app.add_subcommand("mv-table", "exact (m, v) for every permutation of S_r");
    mv->add_option("--r", mv_r, "group degree, at most 6")->capture_default_str();
    Common mv_common;
    mv->add_option("--out", mv_common.out, "output file (default stdout)");
    mv->add_option("--format", mv_common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    Common cc;
    std::vector<std::string> rho_text{"2", "3"};
    auto* clt_chars = add_command(app, "clt-characters", "scaled characters under Plancherel measure", cc, {"400"}, 2000);
    clt_chars->add_option("--rho", rho_text, "cycle types, ';' separated, e.g. \"2;2,2\"")
        ->delimiter(';')
        ->capture_default_str();

    Common ct;
    auto* clt_ts = add_command(app, "clt-total-sum", "fluctuations of the total sum", ct, {"400"}, 2000, true,
                               {"(1,2)", "(1,2,3)"});

    Common mt;
    auto* main_term = add_command(app, "main-term", "main term of the partial trace and partial sum", mt, {"400"},
                                  2000, true, {"(1,2)"}, true, {"1/2"});

    Common ps;
    auto* ps_lln = add_command(app, "partial-sum-lln", "law of large numbers for the partial sum", ps,
                               {"20", "30", "40"}, 500, true, {"(1,2)", "id"}, true, {"1/2"});

    Common cj;
    double alpha = 0.2;
    int s = 1;
    std::string mode = "exact";
    auto* conj = add_command(app, "conjecture", "probability that a dimension ratio beats n^{-alpha s}", cj,
                             {"7..40"}, 1000);
    conj->add_option("--alpha", alpha)->capture_default_str();
    conj->add_option("--s", s)->capture_default_str();
    conj->add_option("--mode", mode, "exact or mc")->check(CLI::IsMember({"exact", "mc"}))->capture_default_str();

    Common co;
    auto* cotr = add_command(app, "cotransition", "distance of the co-transition CDF to the semicircle", co,
                             {"10", "100", "1000"}, 50);

    Common id;
    auto* ident = add_command(app, "identities", "finite identity suites", id, {"8"}, 0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (mv->parsed()) {
            emit(mv_table_report(mv_r), mv_common);
        } else if (clt_chars->parsed()) {
            std::vector<CycleType> rhos;
            for (const auto& r : rho_text)
                rhos.push_back(CycleType::parse(r));
            auto cfg = config_of(cc);
            emit(stat_report("clt-characters", cfg, clt_characters(cfg, rhos)), cc);
        } else if (clt_ts->parsed()) {
            auto cfg = config_of(ct);
            emit(stat_report("clt-total-sum", cfg, clt_total_sum(cfg, sigmas_of(ct))), ct);
        } else if (main_term->parsed()) {
            auto cfg = config_of(mt);
            emit(stat_report("main-term", cfg, main_term_experiment(cfg, sigmas_of(mt), us_of(mt))), mt);
        } else if (ps_lln->parsed()) {
            auto cfg = config_of(ps);
            emit(stat_report("partial-sum-lln", cfg, partial_sum_lln(cfg, sigmas_of(ps), us_of(ps))), ps);
        } else if (conj->parsed()) {
            auto cfg = config_of(cj);
            bool exact = mode == "exact";
            emit(conjecture_report(cfg, alpha, s, exact, conjecture_probe(cfg, alpha, s, exact)), cj);
        } else if (cotr->parsed()) {
            auto cfg = config_of(co);
            emit(cotransition_report(cfg, cotransition_semicircle(cfg)), co);
        } else if (ident->parsed()) {
            int max_n = expand_n(id.n).at(0);
            std::vector<IdentityResult> all = run_identity_suite(max_n, id.seed);
            for (auto& r : run_jm_suite(std::min(max_n, 7), 10, 6))
                all.push_back(std::move(r));
            for (auto& r : run_shifted_product_suite())
                all.push_back(std::move(r));
            for (auto& r : run_stieltjes_suite(10, 20, id.seed))
                all.push_back(std::move(r));
            emit(identity_report(all, id.seed), id);
            bool ok = true;
            for (const auto& r : all)
                ok = ok && r.passed;
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
