#include "symrep/jm_algebra.hpp"

#include "symrep/characters.hpp"

#include <algorithm>
#include <numeric>

namespace symrep {

namespace {

std::uint64_t set_nibble(std::uint64_t key, int x, int value)
{
    if (x < 1 || x > PartialPermutation::max_points)
        throw std::out_of_range("partial permutation point outside 1..15");
    int shift = 4 * (x - 1);
    key &= ~(std::uint64_t(0xF) << shift);
    return key | (std::uint64_t(value) << shift);
}

} // namespace

PartialPermutation::PartialPermutation(const std::vector<int>& support, const std::vector<int>& images)
{
    if (support.size() != images.size())
        throw std::invalid_argument("support and images differ in size");
    std::vector<int> a = support, b = images;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end() || a != b)
        throw std::invalid_argument("partial permutation must map its support onto itself");
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (images[i] < 1 || images[i] > max_points)
            throw std::out_of_range("partial permutation point outside 1..15");
        key_ = set_nibble(key_, support[i], images[i]);
    }
}

PartialPermutation PartialPermutation::restrict(const Permutation& sigma, const std::vector<int>& support)
{
    std::vector<int> images;
    for (int x : support)
        images.push_back(sigma(x));
    return PartialPermutation(support, images);
}

PartialPermutation PartialPermutation::transposition(int i, int j) { return PartialPermutation({i, j}, {j, i}); }

std::vector<int> PartialPermutation::support() const
{
    std::vector<int> out;
    for (int x = 1; x <= max_points; ++x)
        if (contains(x))
            out.push_back(x);
    return out;
}

CycleType PartialPermutation::type() const
{
    std::vector<int> parts;
    std::uint64_t seen = 0;
    for (int x = 1; x <= max_points; ++x) {
        if (!contains(x) || (seen >> x & 1))
            continue;
        int len = 0;
        for (int y = x; !(seen >> y & 1); y = (*this)(y)) {
            seen |= std::uint64_t(1) << y;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return CycleType(std::move(parts));
}

PartialPermutation PartialPermutation::conjugated(const Permutation& g) const
{
    std::uint64_t key = 0;
    for (int x = 1; x <= max_points; ++x)
        if (contains(x))
            key = set_nibble(key, g(x), g((*this)(x)));
    return from_key(key);
}

std::string PartialPermutation::str() const
{
    std::string s = "(";
    std::vector<int> d = support();
    std::vector<int> img;
    for (int x : d)
        img.push_back((*this)(x));
    int deg = d.empty() ? 0 : d.back();
    std::vector<int> full(deg);
    std::iota(full.begin(), full.end(), 1);
    for (std::size_t i = 0; i < d.size(); ++i)
        full[d[i] - 1] = img[i];
    s += Permutation(full).str();
    s += ",{";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(d[i]);
    }
    return s + "})";
}

PartialPermutation pp_multiply(const PartialPermutation& a, const PartialPermutation& b)
{
    std::uint64_t key = 0;
    for (int x = 1; x <= PartialPermutation::max_points; ++x)
        if (a.contains(x) || b.contains(x))
            key = set_nibble(key, x, a(b(x)));
    return PartialPermutation::from_key(key);
}

FormalSum FormalSum::unit(int n)
{
    FormalSum s(n);
    s.add(PartialPermutation(), 1);
    return s;
}

Rational FormalSum::coefficient(const PartialPermutation& p) const
{
    auto it = terms_.find(p.key());
    return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSum::add(const PartialPermutation& p, const Rational& c)
{
    if (c == 0)
        return;
    for (int x : p.support())
        if (x > n_)
            throw std::invalid_argument("partial permutation outside 1..n");
    auto [it, fresh] = terms_.try_emplace(p.key(), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FormalSum FormalSum::operator+(const FormalSum& o) const
{
    FormalSum out = *this;
    out.n_ = std::max(n_, o.n_);
    for (const auto& [k, c] : o.terms_)
        out.add(PartialPermutation::from_key(k), c);
    return out;
}

FormalSum FormalSum::operator-(const FormalSum& o) const { return *this + o.scaled(-1); }

FormalSum FormalSum::scaled(const Rational& c) const
{
    FormalSum out(n_);
    if (c == 0)
        return out;
    for (const auto& [k, v] : terms_)
        out.terms_.emplace(k, v * c);
    return out;
}

FormalSum FormalSum::conjugated(const Permutation& g) const
{
    FormalSum out(n_);
    for (const auto& [k, v] : terms_)
        out.add(PartialPermutation::from_key(k).conjugated(g), v);
    return out;
}

bool FormalSum::operator==(const FormalSum& o) const { return terms_ == o.terms_; }

FormalSum multiply(const FormalSum& a, const FormalSum& b, std::size_t* budget)
{
    std::size_t work = a.size() * b.size();
    if (budget) {
        if (work > *budget)
            throw ExpansionTooLarge("partial permutation expansion above the term cap");
        *budget -= work;
    }
    FormalSum out(std::max(a.n(), b.n()));
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add(pp_multiply(PartialPermutation::from_key(ka), PartialPermutation::from_key(kb)), ca * cb);
    return out;
}

FormalSum jm_element(int i, int n)
{
    if (i < 1 || i > n)
        throw std::out_of_range("jm_element: index outside 1..n");
    FormalSum s(n);
    for (int j = 1; j < i; ++j)
        s.add(PartialPermutation::transposition(j, i), 1);
    return s;
}

FormalSum alpha_element(const CycleType& rho, int n)
{
    int m = rho.size();
    FormalSum s(n);
    if (m > n)
        return s;
    std::vector<Permutation> shapes;
    for (auto& p : all_permutations(m))
        if (p.cycle_type() == rho)
            shapes.push_back(p);
    std::vector<char> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + m, 1);
    do {
        std::vector<int> d;
        for (int x = 0; x < n; ++x)
            if (mask[x])
                d.push_back(x + 1);
        for (const auto& p : shapes) {
            std::vector<int> images(m);
            for (int i = 0; i < m; ++i)
                images[i] = d[p(i + 1) - 1];
            s.add(PartialPermutation(d, images), 1);
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return s;
}

namespace {

void check_n(int n, const JmLimits& limits)
{
    if (n < 1 || n > limits.max_n || n > PartialPermutation::max_points)
        throw ExpansionTooLarge("n outside the supported range for explicit expansion");
}

FormalSum single_power_sum(int k, int n, std::size_t* budget)
{
    FormalSum total(n);
    for (int i = 2; i <= n; ++i) {
        FormalSum xi = jm_element(i, n);
        FormalSum power = xi;
        for (int e = 1; e < k; ++e)
            power = multiply(power, xi, budget);
        total = total + power;
    }
    return total;
}

FormalSum product_of(const std::vector<FormalSum>& factors, int n, std::size_t* budget)
{
    FormalSum out = FormalSum::unit(n);
    for (const auto& f : factors)
        out = multiply(out, f, budget);
    return out;
}

} // namespace

FormalSum power_sum_jm(const CycleType& nu, int n, const JmLimits& limits)
{
    check_n(n, limits);
    std::size_t budget = limits.max_terms;
    std::vector<FormalSum> factors;
    for (int k : nu.parts())
        factors.push_back(single_power_sum(k, n, &budget));
    return product_of(factors, n, &budget);
}

FormalSum modified_power_sum_jm(const CycleType& nu, int n, const JmLimits& limits)
{
    check_n(n, limits);
    std::size_t budget = limits.max_terms;
    std::vector<FormalSum> factors;
    for (int k : nu.parts()) {
        FormalSum f = single_power_sum(k, n, &budget);
        if (k % 2 == 0) {
            int h = k / 2;
            Rational c(catalan(h) * factorial(h));
            f = f - alpha_element(CycleType(std::vector<int>(h + 1, 1)), n).scaled(c);
        }
        factors.push_back(std::move(f));
    }
    return product_of(factors, n, &budget);
}

AlphaExpansion to_alpha(const FormalSum& x)
{
    struct Seen {
        Rational coeff;
        BigInt count;
    };
    std::map<CycleType, Seen> by_type;
    for (const auto& [k, c] : x.terms()) {
        CycleType t = PartialPermutation::from_key(k).type();
        auto [it, fresh] = by_type.try_emplace(t, Seen{c, 0});
        if (!fresh && it->second.coeff != c)
            throw NotInvariant("coefficient differs within a conjugacy orbit of type " + t.str());
        it->second.count += 1;
    }
    AlphaExpansion out;
    for (auto& [t, seen] : by_type) {
        // C(n, |t|) |t|! / z_t partial permutations of type t
        BigInt orbit = falling_factorial(x.n(), t.size()) / t.centralizer_order();
        if (seen.count != orbit)
            throw NotInvariant("orbit of type " + t.str() + " is only partially present");
        out.emplace(t, seen.coeff);
    }
    return out;
}

Rational phi_n(const AlphaExpansion& x, const Partition& lambda)
{
    int n = lambda.size();
    Rational acc = 0;
    for (const auto& [rho, c] : x) {
        if (rho.size() > n)
            continue;
        Rational term(falling_factorial(n, rho.size()), rho.centralizer_order());
        term.canonicalize();
        acc += c * term * normalized_character(lambda, rho);
    }
    return acc;
}

BigInt catalan(int k)
{
    if (k < 0)
        return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * k, k);
    return b / (k + 1);
}

BigInt content_eval(const CycleType& nu, const Partition& lambda)
{
    std::vector<int> contents = contents_multiset(lambda);
    BigInt out = 1;
    for (int k : nu.parts()) {
        BigInt s = 0;
        for (int c : contents) {
            BigInt p;
            mpz_pow_ui(p.get_mpz_t(), BigInt(c).get_mpz_t(), k);
            s += p;
        }
        out *= s;
    }
    return out;
}

Rational modified_content_power(int k, const Partition& lambda)
{
    Rational value(content_eval(CycleType(std::vector<int>{k}), lambda));
    if (k % 2 == 0) {
        int h = k / 2;
        Rational correction(catalan(h) * falling_factorial(lambda.size(), h + 1), h + 1);
        correction.canonicalize();
        value -= correction;
    }
    return value;
}

Rational modified_content_eval(const CycleType& nu, const Partition& lambda)
{
    Rational out = 1;
    for (int k : nu.parts())
        out *= modified_content_power(k, lambda);
    return out;
}

} // namespace symrep
