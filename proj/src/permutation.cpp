#include "symrep/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symrep {

int CycleType::multiplicity(int k) const
{
    return static_cast<int>(std::count(parts().begin(), parts().end(), k));
}

BigInt CycleType::centralizer_order() const
{
    BigInt z = 1;
    for (int p : parts())
        z *= p;
    const auto& ps = parts();
    for (std::size_t i = 0; i < ps.size();) {
        std::size_t j = i;
        while (j < ps.size() && ps[j] == ps[i])
            ++j;
        z *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return z;
}

BigInt CycleType::class_size() const
{
    BigInt r = factorial(size());
    BigInt z = centralizer_order();
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), z.get_mpz_t());
    return r;
}

std::vector<int> CycleType::nontrivial_parts() const
{
    std::vector<int> out;
    for (int p : parts())
        if (p > 1)
            out.push_back(p);
    return out;
}

CycleType CycleType::padded(int n) const
{
    if (n < size())
        throw std::invalid_argument("cycle type larger than target size");
    std::vector<int> ps = parts();
    ps.insert(ps.end(), n - size(), 1);
    return CycleType(std::move(ps));
}

CycleType CycleType::without_fixed_points() const { return CycleType(nontrivial_parts()); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<char> seen(images_.size() + 1, 0);
    for (int x : images_) {
        if (x < 1 || x > degree() || seen[x])
            throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int r)
{
    std::vector<int> v(r);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int i, int j, int r)
{
    return from_cycles({{i, j}}, r);
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int r)
{
    int deg = r;
    for (const auto& c : cycles)
        for (int x : c) {
            if (x < 1)
                throw std::invalid_argument("cycle entries must be positive");
            deg = std::max(deg, x);
        }
    std::vector<int> img(deg);
    std::iota(img.begin(), img.end(), 1);
    std::vector<char> used(deg + 1, 0);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (used[c[i]])
                throw std::invalid_argument("cycles are not disjoint");
            used[c[i]] = 1;
            img[c[i] - 1] = c[(i + 1) % c.size()];
        }
    }
    return Permutation(std::move(img));
}

namespace {

std::vector<int> parse_ints(const std::string& body)
{
    std::vector<int> out;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) {
            out.push_back(std::stoi(tok));
            tok.clear();
        }
    };
    for (char c : body) {
        if (c >= '0' && c <= '9')
            tok.push_back(c);
        else if (c == ',' || c == ' ')
            flush();
        else
            throw std::invalid_argument("bad permutation text");
    }
    flush();
    return out;
}

} // namespace

Permutation Permutation::parse(std::string_view text, int r)
{
    std::string s(text);
    s.erase(0, s.find_first_not_of(' '));
    s.erase(s.find_last_not_of(' ') + 1);
    if (s.empty() || s == "id" || s == "()" || s == "e")
        return identity(r);
    if (s.front() == '[') {
        if (s.back() != ']')
            throw std::invalid_argument("bad one-line permutation: " + s);
        return Permutation(parse_ints(s.substr(1, s.size() - 2))).extended(r);
    }
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ' ') {
            ++pos;
            continue;
        }
        if (s[pos] != '(')
            throw std::invalid_argument("bad cycle notation: " + s);
        auto close = s.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("unbalanced cycle notation: " + s);
        auto cyc = parse_ints(s.substr(pos + 1, close - pos - 1));
        if (cyc.size() > 1)
            cycles.push_back(std::move(cyc));
        pos = close + 1;
    }
    return from_cycles(cycles, r);
}

Permutation Permutation::operator*(const Permutation& other) const
{
    int deg = std::max(degree(), other.degree());
    std::vector<int> img(deg);
    for (int i = 1; i <= deg; ++i)
        img[i - 1] = (*this)(other(i));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const
{
    std::vector<int> img(degree());
    for (int i = 1; i <= degree(); ++i)
        img[images_[i - 1] - 1] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::extended(int r) const
{
    if (r <= degree())
        return *this;
    std::vector<int> img = images_;
    for (int i = degree() + 1; i <= r; ++i)
        img.push_back(i);
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree() + 1, 0);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[i] || images_[i - 1] == i)
            continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = images_[j - 1]) {
            seen[j] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

CycleType Permutation::cycle_type() const
{
    std::vector<int> parts;
    int moved = 0;
    for (const auto& c : cycles()) {
        parts.push_back(static_cast<int>(c.size()));
        moved += static_cast<int>(c.size());
    }
    std::sort(parts.rbegin(), parts.rend());
    parts.insert(parts.end(), degree() - moved, 1);
    return CycleType(std::move(parts));
}

std::vector<int> Permutation::support() const
{
    std::vector<int> out;
    for (int i = 1; i <= degree(); ++i)
        if (images_[i - 1] != i)
            out.push_back(i);
    return out;
}

int Permutation::max_moved() const
{
    for (int i = degree(); i >= 1; --i)
        if (images_[i - 1] != i)
            return i;
    return 0;
}

int Permutation::coxeter_length() const
{
    int inv = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (images_[i] > images_[j])
                ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const
{
    // bubble sort the one-line word; each swap at position k is a right
    // multiplication by s_k, so sigma is the reversed product of the swaps
    std::vector<int> a = images_;
    std::vector<int> swaps;
    for (int pass = 0; pass < degree(); ++pass) {
        bool any = false;
        for (int k = 0; k + 1 < degree(); ++k)
            if (a[k] > a[k + 1]) {
                std::swap(a[k], a[k + 1]);
                swaps.push_back(k + 1);
                any = true;
            }
        if (!any)
            break;
    }
    return {swaps.rbegin(), swaps.rend()};
}

std::string Permutation::str() const
{
    auto cs = cycles();
    if (cs.empty())
        return "id";
    std::string s;
    for (const auto& c : cs) {
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(c[i]);
        }
        s += ')';
    }
    return s;
}

bool Permutation::operator==(const Permutation& o) const
{
    int deg = std::max(degree(), o.degree());
    for (int i = 1; i <= deg; ++i)
        if ((*this)(i) != o(i))
            return false;
    return true;
}

std::vector<Permutation> all_permutations(int r)
{
    std::vector<int> v(r);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace symrep
