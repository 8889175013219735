#include "symrep/seminormal.hpp"

#include "symrep/characters.hpp"
#include "symrep/plancherel.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symrep {

std::string to_string(SeminormalForm form)
{
    return form == SeminormalForm::young ? "young" : "orthogonal";
}

SeminormalForm parse_form(const std::string& text)
{
    if (text == "young")
        return SeminormalForm::young;
    if (text == "orthogonal")
        return SeminormalForm::orthogonal;
    throw std::invalid_argument("unknown seminormal form: " + text);
}

namespace {

constexpr int basis_cache_max_dimension = 50000;

std::string row_key(const StandardTableau& t)
{
    std::string key(t.size(), '\0');
    for (int k = 1; k <= t.size(); ++k)
        key[k - 1] = static_cast<char>(t.cell(k).row);
    return key;
}

} // namespace

std::shared_ptr<const TableauBasis> TableauBasis::of(const Partition& lambda)
{
    static std::mutex mutex;
    static std::map<Partition, std::shared_ptr<const TableauBasis>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(lambda);
        if (it != cache.end())
            return it->second;
    }
    auto b = std::make_shared<TableauBasis>();
    b->shape_ = lambda;
    b->tableaux_ = enumerate_last_letter(lambda);
    b->dim_ = static_cast<int>(b->tableaux_.size());
    int n = lambda.size();
    std::unordered_map<std::string, int> index;
    index.reserve(b->dim_);
    std::vector<std::string> keys(b->dim_);
    for (int i = 0; i < b->dim_; ++i) {
        keys[i] = row_key(b->tableaux_[i]);
        index.emplace(keys[i], i);
    }
    int gens = std::max(n - 1, 0);
    b->partner_.assign(std::size_t(gens) * b->dim_, -1);
    b->gap_.assign(std::size_t(gens) * b->dim_, 0);
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < b->dim_; ++i) {
            const auto& t = b->tableaux_[i];
            Cell a = t.cell(k), c = t.cell(k + 1);
            b->gap_[std::size_t(k - 1) * b->dim_ + i] = c.content() - a.content();
            if (a.row == c.row || a.col == c.col)
                continue;
            std::string key = keys[i];
            std::swap(key[k - 1], key[k]);
            b->partner_[std::size_t(k - 1) * b->dim_ + i] = index.at(key);
        }
    if (b->dim_ <= basis_cache_max_dimension) {
        std::lock_guard lock(mutex);
        cache.emplace(lambda, b);
    }
    return b;
}

int TableauBasis::index_of(const StandardTableau& t) const
{
    for (int i = 0; i < dim_; ++i)
        if (tableaux_[i] == t)
            return i;
    return -1;
}

double max_abs_difference(const RepMatrix& a, const RepMatrix& b)
{
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("matrix sizes differ");
    double m = 0;
    for (int i = 0; i < a.dimension(); ++i)
        for (int j = 0; j < a.dimension(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

void dump(const RepMatrix& m, std::ostream& os)
{
    auto flags = os.flags();
    auto prec = os.precision();
    os << std::setprecision(17);
    for (int i = 0; i < m.dimension(); ++i) {
        for (int j = 0; j < m.dimension(); ++j) {
            if (j)
                os << ' ';
            double x = m(i, j);
            os << (x == 0 ? 0.0 : x);
        }
        os << '\n';
    }
    os.flags(flags);
    os.precision(prec);
}

std::string dump(const RepMatrix& m)
{
    std::ostringstream os;
    dump(m, os);
    return os.str();
}

namespace {

void check_fits(const Partition& lambda, const Permutation& sigma)
{
    if (sigma.max_moved() > lambda.size())
        throw std::invalid_argument("permutation moves points beyond the shape size");
}

int group_degree(const Permutation& sigma) { return std::max(sigma.max_moved(), 1); }

struct FloatEntries {
    SeminormalForm form;
    double diag(int gap) const { return 1.0 / gap; }
    // A[row][partner(row)]
    double off(int gap_row) const
    {
        double a = 1.0 / gap_row;
        return form == SeminormalForm::orthogonal ? std::sqrt(1.0 - a * a) : 1.0 - a;
    }
};

struct ExactEntries {
    Rational diag(int gap) const { return Rational(1) / gap; }
    Rational off(int gap_row) const { return Rational(1) - Rational(1) / gap_row; }
};

// M = A_{w_1} ... A_{w_m}, built by left multiplication so rows stay contiguous
template <class T, class Entries>
DenseMatrix<T> build_matrix(const TableauBasis& b, const std::vector<int>& word, const Entries& e)
{
    int dim = b.dimension();
    auto m = DenseMatrix<T>::identity(b.shape(), dim);
    std::vector<T> row_c(dim), row_p(dim);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int k = *it;
        for (int c = 0; c < dim; ++c) {
            int p = b.partner(k, c);
            int gc = b.content_gap(k, c);
            if (p < 0) {
                T d = e.diag(gc);
                for (int j = 0; j < dim; ++j)
                    m(c, j) *= d;
                continue;
            }
            if (p < c)
                continue;
            int gp = b.content_gap(k, p);
            T acc = e.diag(gc), acp = e.off(gc);
            T apc = e.off(gp), app = e.diag(gp);
            for (int j = 0; j < dim; ++j) {
                row_c[j] = acc * m(c, j) + acp * m(p, j);
                row_p[j] = apc * m(c, j) + app * m(p, j);
            }
            for (int j = 0; j < dim; ++j) {
                m(c, j) = row_c[j];
                m(p, j) = row_p[j];
            }
        }
    }
    return m;
}

BigInt index_bound(const Rational& u, const BigInt& dim)
{
    BigInt num = u.get_num() * dim, k;
    mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), u.get_den_mpz_t());
    return k;
}

void check_unit(const Rational& u)
{
    if (u < 0 || u > 1)
        throw std::invalid_argument("u outside [0,1]");
}

enum class Functional { trace, sum };

class PrefixEvaluator {
public:
    PrefixEvaluator(const Permutation& sigma, const SeminormalOptions& opt)
        : sigma_(sigma), r_(group_degree(sigma)), type_(sigma.extended(r_).cycle_type()), opt_(opt)
    {
        if (sigma.degree() > r_) {
            std::vector<int> img(sigma.images().begin(), sigma.images().begin() + r_);
            type_ = Permutation(img).cycle_type();
        }
    }

    double full(const Partition& mu, Functional f)
    {
        if (f == Functional::trace)
            return normalized_character(mu, type_).get_d();
        if (!expansion_)
            expansion_ = total_sum_expansion(sigma_, opt_.form, r_);
        return expansion_->evaluate(mu);
    }

    // sum over indices < K, divided by dim lambda
    double prefix(const Partition& lambda, const BigInt& k, Functional f)
    {
        if (k <= 0)
            return 0;
        BigInt dim = dimension(lambda);
        if (k >= dim)
            return full(lambda, f);
        if (dim <= opt_.dense_threshold || lambda.size() <= r_)
            return dense_prefix(lambda, k.get_si(), f);
        BigInt before = 0;
        double acc = 0;
        for (const auto& sub : subpartitions(lambda)) {
            BigInt dmu = dimension(sub.shape);
            Rational w(dmu, dim);
            w.canonicalize();
            if (before + dmu <= k) {
                acc += w.get_d() * full(sub.shape, f);
                before += dmu;
                if (before == k)
                    break;
            } else {
                acc += w.get_d() * prefix(sub.shape, k - before, f);
                break;
            }
        }
        return acc;
    }

private:
    double dense_prefix(const Partition& lambda, long k, Functional f)
    {
        SeminormalOptions o = opt_;
        RepMatrix m = rep_matrix(lambda, sigma_, o);
        long double acc = 0;
        if (f == Functional::trace) {
            for (long i = 0; i < k; ++i)
                acc += m(i, i);
        } else {
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j)
                    acc += m(i, j);
        }
        return static_cast<double>(acc / m.dimension());
    }

    Permutation sigma_;
    int r_;
    CycleType type_;
    SeminormalOptions opt_;
    std::optional<TotalSumExpansion> expansion_;
};

} // namespace

RepMatrix adjacent_matrix(const Partition& lambda, int k, const SeminormalOptions& opt)
{
    if (k < 1 || k >= lambda.size())
        throw std::out_of_range("adjacent_matrix: k out of range");
    return rep_matrix(lambda, Permutation::transposition(k, k + 1), opt);
}

RepMatrix rep_matrix(const Partition& lambda, const Permutation& sigma, const SeminormalOptions& opt)
{
    check_fits(lambda, sigma);
    if (dimension(lambda) > opt.max_dimension)
        throw std::length_error("rep_matrix: dimension above the dense cap " + std::to_string(opt.max_dimension));
    auto b = TableauBasis::of(lambda);
    return build_matrix<double>(*b, sigma.reduced_word(), FloatEntries{opt.form});
}

ExactRepMatrix rep_matrix_exact(const Partition& lambda, const Permutation& sigma, std::size_t max_dimension)
{
    check_fits(lambda, sigma);
    if (dimension(lambda) > max_dimension)
        throw std::length_error("rep_matrix_exact: dimension above the dense cap");
    auto b = TableauBasis::of(lambda);
    return build_matrix<Rational>(*b, sigma.reduced_word(), ExactEntries{});
}

double partial_trace(const Partition& lambda, const Permutation& sigma, const Rational& u,
                     const SeminormalOptions& opt)
{
    check_unit(u);
    check_fits(lambda, sigma);
    PrefixEvaluator ev(sigma, opt);
    return ev.prefix(lambda, index_bound(u, dimension(lambda)), Functional::trace);
}

double total_sum(const Partition& lambda, const Permutation& sigma, const SeminormalOptions& opt)
{
    check_fits(lambda, sigma);
    BigInt dim = dimension(lambda);
    if (dim <= opt.dense_threshold) {
        RepMatrix m = rep_matrix(lambda, sigma, opt);
        long double acc = 0;
        for (int i = 0; i < m.dimension(); ++i)
            for (int j = 0; j < m.dimension(); ++j)
                acc += m(i, j);
        return static_cast<double>(acc / m.dimension());
    }
    return total_sum_expansion(sigma, opt.form).evaluate(lambda);
}

Rational total_sum_exact(const Partition& lambda, const Permutation& sigma)
{
    ExactRepMatrix m = rep_matrix_exact(lambda, sigma);
    Rational acc = 0;
    for (int i = 0; i < m.dimension(); ++i)
        for (int j = 0; j < m.dimension(); ++j)
            acc += m(i, j);
    return acc / m.dimension();
}

double partial_sum(const Partition& lambda, const Permutation& sigma, const Rational& u,
                   const SeminormalOptions& opt)
{
    check_unit(u);
    check_fits(lambda, sigma);
    PrefixEvaluator ev(sigma, opt);
    return ev.prefix(lambda, index_bound(u, dimension(lambda)), Functional::sum);
}

double partial_sum_rect(const Partition& lambda, const Permutation& sigma, const Rational& u1,
                        const Rational& u2, const SeminormalOptions& opt)
{
    check_unit(u1);
    check_unit(u2);
    RepMatrix m = rep_matrix(lambda, sigma, opt);
    BigInt dim = m.dimension();
    long k1 = index_bound(u1, dim).get_si(), k2 = index_bound(u2, dim).get_si();
    long double acc = 0;
    for (long i = 0; i < k1; ++i)
        for (long j = 0; j < k2; ++j)
            acc += m(i, j);
    return static_cast<double>(acc / m.dimension());
}

double TotalSumExpansion::evaluate(const Partition& lambda) const
{
    if (form == SeminormalForm::young && !exact_terms.empty())
        return evaluate_exact(lambda).get_d();
    double acc = 0;
    for (const auto& [rho, c] : terms)
        acc += c * normalized_character(lambda, rho).get_d();
    return acc;
}

Rational TotalSumExpansion::evaluate_exact(const Partition& lambda) const
{
    if (form != SeminormalForm::young)
        throw std::logic_error("exact total sum expansion needs the young form");
    Rational acc = 0;
    for (const auto& [rho, c] : exact_terms)
        acc += c * normalized_character(lambda, rho);
    return acc;
}

TotalSumExpansion total_sum_expansion(const Permutation& sigma, SeminormalForm form, int r)
{
    if (r == 0)
        r = group_degree(sigma);
    if (r < sigma.max_moved())
        throw std::invalid_argument("total_sum_expansion: r smaller than the degree of sigma");
    TotalSumExpansion e;
    e.sigma = sigma;
    e.r = r;
    e.form = form;
    auto shapes = enumerate_partitions(r);
    std::map<CycleType, Rational> exact;
    std::map<CycleType, double> approx;
    SeminormalOptions opt;
    opt.form = form;
    opt.dense_threshold = std::size_t(-1);
    for (const auto& nu : shapes) {
        Rational p = plancherel_pmf(nu);
        Rational ts_exact;
        double ts = 0;
        if (form == SeminormalForm::young)
            ts_exact = total_sum_exact(nu, sigma);
        else
            ts = total_sum(nu, sigma, opt);
        for (const auto& rho_shape : shapes) {
            CycleType rho(rho_shape);
            Rational w = Rational(rho.class_size()) * p * normalized_character(nu, rho);
            if (form == SeminormalForm::young)
                exact[rho] += w * ts_exact;
            else
                approx[rho] += w.get_d() * ts;
        }
    }
    if (form == SeminormalForm::young) {
        for (auto& [rho, c] : exact)
            if (c != 0) {
                e.exact_terms.emplace_back(rho, c);
                e.terms.emplace_back(rho, c.get_d());
            }
    } else {
        for (auto& [rho, c] : approx)
            if (c != 0)
                e.terms.emplace_back(rho, c);
    }
    return e;
}

double total_sum_via_skew(const Partition& lambda, const Permutation& sigma, int r, const SeminormalOptions& opt)
{
    if (r == 0)
        r = group_degree(sigma);
    if (r > lambda.size() || r < sigma.max_moved())
        throw std::invalid_argument("total_sum_via_skew: bad r");
    BigInt dim = dimension(lambda);
    double acc = 0;
    for (const auto& nu : enumerate_partitions(r)) {
        BigInt skew = skew_dimension(lambda, nu);
        if (skew == 0)
            continue;
        Rational w(dimension(nu) * skew, dim);
        w.canonicalize();
        acc += w.get_d() * total_sum(nu, sigma, opt);
    }
    return acc;
}

double TraceDecomposition::main_value() const
{
    double acc = 0;
    for (const auto& t : main_terms)
        acc += t.weight.get_d() * t.value;
    return acc;
}

namespace {

TraceDecomposition decompose(const Partition& lambda, const Permutation& sigma, const Rational& u,
                             const SeminormalOptions& opt, Functional f)
{
    check_unit(u);
    if (lambda.size() < 2 || sigma.max_moved() > lambda.size() - 1)
        throw std::invalid_argument("decomposition needs sigma in S_{n-1}");
    PrefixEvaluator ev(sigma, opt);
    BigInt dim = dimension(lambda);
    auto subs = subpartitions(lambda);
    int d = static_cast<int>(subs.size());
    TraceDecomposition out;
    int bar = u == 1 ? d + 1 : quantile_ct(lambda, u).bar_j;
    BigInt before = 0;
    for (int j = 1; j < bar; ++j) {
        BigInt dmu = dimension(subs[j - 1].shape);
        Rational w(dmu, dim);
        w.canonicalize();
        out.main_terms.push_back({subs[j - 1].shape, w, ev.full(subs[j - 1].shape, f)});
        before += dmu;
    }
    if (u == 1) {
        out.bar_j = d;
        out.bar_u_exact = 0;
        out.bar_u = 0;
        out.remainder_value = 0;
        return out;
    }
    const Partition& mu = subs[bar - 1].shape;
    BigInt dmu = dimension(mu);
    out.bar_j = bar;
    out.bar_u_exact = (u * Rational(dim) - Rational(before)) / Rational(dmu);
    out.bar_u = out.bar_u_exact.get_d();
    Rational w(dmu, dim);
    w.canonicalize();
    BigInt k = index_bound(u, dim) - before;
    out.remainder_value = w.get_d() * ev.prefix(mu, k, f);
    return out;
}

} // namespace

TraceDecomposition decompose_partial_trace(const Partition& lambda, const Permutation& sigma, const Rational& u,
                                           const SeminormalOptions& opt)
{
    return decompose(lambda, sigma, u, opt, Functional::trace);
}

TraceDecomposition decompose_partial_sum(const Partition& lambda, const Permutation& sigma, const Rational& u,
                                         const SeminormalOptions& opt)
{
    return decompose(lambda, sigma, u, opt, Functional::sum);
}

double IteratedDecomposition::reconstruct() const
{
    double acc = 0;
    for (const auto& l : levels)
        acc += l.weight.get_d() * l.main_value;
    return acc + terminal_weight.get_d() * terminal_value;
}

IteratedDecomposition iterated_decomposition(const Partition& lambda, const Permutation& sigma, const Rational& u,
                                             int s, const SeminormalOptions& opt)
{
    check_unit(u);
    if (s < 0 || lambda.size() - s <= group_degree(sigma))
        throw std::invalid_argument("iterated_decomposition: s too large");
    IteratedDecomposition out;
    Partition mu = lambda;
    Rational cur_u = u;
    Rational weight = 1;
    for (int level = 0; level < s; ++level) {
        TraceDecomposition d = decompose_partial_trace(mu, sigma, cur_u, opt);
        out.levels.push_back({mu, cur_u, weight, d.main_value()});
        auto subs = subpartitions(mu);
        const Partition& next = subs[d.bar_j - 1].shape;
        weight *= dimension_ratio(next, mu);
        mu = next;
        cur_u = d.bar_u_exact;
    }
    out.terminal_shape = mu;
    out.terminal_u = cur_u;
    out.terminal_weight = weight;
    out.terminal_value = partial_trace(mu, sigma, cur_u, opt);
    return out;
}

bool block_restriction_check(const Partition& lambda, const Permutation& sigma, int r,
                             const SeminormalOptions& opt, double tol)
{
    if (r == 0)
        r = std::max(sigma.degree(), 1);
    if (r < sigma.max_moved() || r >= lambda.size())
        throw std::invalid_argument("block_restriction_check needs sigma in S_r with r < n");
    RepMatrix m = rep_matrix(lambda, sigma, opt);
    auto b = TableauBasis::of(lambda);
    int dim = b->dimension();
    std::vector<std::pair<StandardTableau, SkewTableau>> parts;
    parts.reserve(dim);
    for (int i = 0; i < dim; ++i)
        parts.push_back(split(b->tableau(i), r));
    std::map<Partition, RepMatrix> small;
    std::vector<int> local(dim);
    for (int i = 0; i < dim; ++i) {
        const Partition& nu = parts[i].first.shape();
        if (!small.count(nu))
            small.emplace(nu, rep_matrix(nu, sigma, opt));
        local[i] = TableauBasis::of(nu)->index_of(parts[i].first);
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double x = m(i, j);
            if (!(parts[i].second == parts[j].second)) {
                if (x != 0.0)
                    return false;
                continue;
            }
            const RepMatrix& block = small.at(parts[i].first.shape());
            if (std::abs(x - block(local[i], local[j])) > tol)
                return false;
        }
    return true;
}

} // namespace symrep
