#include "symrep/partition.hpp"

#include <map>
#include <stdexcept>

namespace symrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
        n_ += parts_[i];
    }
    if (!parts_.empty()) {
        conj_.assign(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++conj_[j];
    }
}

Partition Partition::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']')
            s.push_back(c);
    std::vector<int> parts;
    if (s.empty())
        return Partition();
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(',', pos);
        if (next == std::string::npos)
            next = s.size();
        std::string tok = s.substr(pos, next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition text: " + std::string(text));
        parts.push_back(std::stoi(tok));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

int Partition::row_length(int row) const
{
    return row >= 0 && row < length() ? parts_[row] : 0;
}

int Partition::column_length(int col) const
{
    return col >= 0 && col < static_cast<int>(conj_.size()) ? conj_[col] : 0;
}

int Partition::hook(int row, int col) const
{
    return (parts_[row] - col - 1) + (conj_[col] - row - 1) + 1;
}

bool Partition::contains(const Partition& other) const
{
    if (other.length() > length())
        return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i])
            return false;
    return true;
}

std::string Partition::str() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

CornerData corners(const Partition& lambda)
{
    CornerData c;
    const auto& p = lambda.parts();
    int len = lambda.length();
    // bottom row first, so contents come out increasing
    for (int i = len; i >= 0; --i) {
        int cur = i < len ? p[i] : 0;
        if (i < len && (i + 1 == len || p[i + 1] < cur))
            c.outer_contents.push_back(cur - 1 - i);
        if (i == 0 || p[i - 1] > cur)
            c.inner_contents.push_back(cur - i);
    }
    return c;
}

std::vector<Neighbour> subpartitions(const Partition& lambda)
{
    std::vector<Neighbour> out;
    const auto& p = lambda.parts();
    for (int i = lambda.length() - 1; i >= 0; --i) {
        if (i + 1 < lambda.length() && p[i + 1] == p[i])
            continue;
        std::vector<int> q = p;
        --q[i];
        if (q[i] == 0)
            q.pop_back();
        Cell cell{i, p[i] - 1};
        out.push_back({Partition(std::move(q)), cell.content(), cell});
    }
    return out;
}

std::vector<Neighbour> superpartitions(const Partition& lambda)
{
    std::vector<Neighbour> out;
    const auto& p = lambda.parts();
    int len = lambda.length();
    for (int i = len; i >= 0; --i) {
        int cur = i < len ? p[i] : 0;
        if (i > 0 && p[i - 1] == cur)
            continue;
        std::vector<int> q = p;
        if (i == len)
            q.push_back(1);
        else
            ++q[i];
        Cell cell{i, cur};
        out.push_back({Partition(std::move(q)), cell.content(), cell});
    }
    return out;
}

std::vector<int> contents_multiset(const Partition& lambda)
{
    std::vector<int> out;
    out.reserve(lambda.size());
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row_length(i); ++j)
            out.push_back(j - i);
    return out;
}

BigInt dimension(const Partition& lambda)
{
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row_length(i); ++j)
            hooks *= lambda.hook(i, j);
    BigInt r = factorial(lambda.size());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), hooks.get_mpz_t());
    return r;
}

Rational dimension_ratio(const Partition& inner, const Partition& outer)
{
    if (!outer.contains(inner))
        throw std::invalid_argument("dimension_ratio: shapes not nested");
    std::vector<char> row_changed(outer.length(), 0);
    std::vector<char> col_changed(outer.row_length(0), 0);
    for (int i = 0; i < outer.length(); ++i)
        row_changed[i] = inner.row_length(i) != outer.row_length(i);
    for (int j = 0; j < outer.row_length(0); ++j)
        col_changed[j] = inner.column_length(j) != outer.column_length(j);

    BigInt num = 1, den = 1;
    for (int i = 0; i < outer.length(); ++i) {
        if (row_changed[i]) {
            for (int j = 0; j < outer.row_length(i); ++j)
                num *= outer.hook(i, j);
            for (int j = 0; j < inner.row_length(i); ++j)
                den *= inner.hook(i, j);
        }
    }
    for (int j = 0; j < outer.row_length(0); ++j) {
        if (!col_changed[j])
            continue;
        for (int i = 0; i < outer.column_length(j); ++i)
            if (!row_changed[i])
                num *= outer.hook(i, j);
        for (int i = 0; i < inner.column_length(j); ++i)
            if (!row_changed[i])
                den *= inner.hook(i, j);
    }
    den *= falling_factorial(outer.size(), outer.size() - inner.size());
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt skew_dimension(const Partition& outer, const Partition& inner)
{
    if (!outer.contains(inner))
        return 0;
    std::map<Partition, BigInt> layer{{inner, BigInt(1)}};
    for (int step = inner.size(); step < outer.size(); ++step) {
        std::map<Partition, BigInt> next;
        for (const auto& [shape, count] : layer)
            for (auto& up : superpartitions(shape))
                if (outer.contains(up.shape))
                    next[up.shape] += count;
        layer = std::move(next);
    }
    auto it = layer.find(outer);
    return it == layer.end() ? BigInt(0) : it->second;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    const std::function<void(const Partition&)>& f)
{
    if (remaining == 0) {
        f(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, f);
        cur.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& f)
{
    if (n < 0)
        throw std::invalid_argument("negative partition size");
    std::vector<int> cur;
    partitions_rec(n, n, cur, f);
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m)
        for_each_partition(m, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace symrep
