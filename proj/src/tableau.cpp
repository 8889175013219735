#include "symrep/tableau.hpp"

#include <stdexcept>

namespace symrep {

namespace {

std::vector<std::vector<int>> grid_of(const Partition& shape, const std::vector<Cell>& cells, int offset)
{
    std::vector<std::vector<int>> g(shape.length());
    for (int i = 0; i < shape.length(); ++i)
        g[i].assign(shape.row_length(i), 0);
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Cell& c = cells[k];
        if (c.row < 0 || c.row >= shape.length() || c.col < 0 || c.col >= shape.row_length(c.row))
            throw std::invalid_argument("tableau cell outside shape");
        if (g[c.row][c.col] != 0)
            throw std::invalid_argument("tableau cell used twice");
        g[c.row][c.col] = static_cast<int>(k) + 1 + offset;
    }
    return g;
}

std::string rows_text(const std::vector<std::vector<int>>& rows, int max_entry)
{
    std::string s;
    bool wide = max_entry > 9;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            s += '/';
        bool first = true;
        for (int x : rows[i]) {
            if (x == 0)
                continue;
            if (wide && !first)
                s += ',';
            s += std::to_string(x);
            first = false;
        }
    }
    return s;
}

} // namespace

StandardTableau::StandardTableau(Partition shape, std::vector<Cell> cells)
    : shape_(std::move(shape)), cells_(std::move(cells))
{
    if (static_cast<int>(cells_.size()) != shape_.size())
        throw std::invalid_argument("tableau size mismatch");
    auto g = grid_of(shape_, cells_, 0);
    for (int i = 0; i < shape_.length(); ++i)
        for (int j = 0; j < shape_.row_length(i); ++j) {
            if (j > 0 && g[i][j - 1] > g[i][j])
                throw std::invalid_argument("tableau rows must increase");
            if (i > 0 && g[i - 1][j] > g[i][j])
                throw std::invalid_argument("tableau columns must increase");
        }
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows)
{
    std::vector<int> parts;
    int n = 0;
    for (const auto& r : rows) {
        if (r.empty())
            continue;
        parts.push_back(static_cast<int>(r.size()));
        n += static_cast<int>(r.size());
    }
    std::vector<Cell> cells(n, Cell{-1, -1});
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int k = rows[i][j];
            if (k < 1 || k > n || cells[k - 1].row != -1)
                throw std::invalid_argument("tableau entries must be 1..n once each");
            cells[k - 1] = Cell{static_cast<int>(i), static_cast<int>(j)};
        }
    return StandardTableau(Partition(parts), std::move(cells));
}

StandardTableau StandardTableau::parse(std::string_view text)
{
    std::vector<std::vector<int>> rows;
    std::string s(text);
    // a single comma anywhere switches every row to comma separated entries
    bool wide = s.find(',') != std::string::npos;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find('/', pos);
        if (next == std::string::npos)
            next = s.size();
        std::string row = s.substr(pos, next - pos);
        std::vector<int> entries;
        if (wide) {
            std::size_t p = 0;
            while (p <= row.size()) {
                auto q = row.find(',', p);
                if (q == std::string::npos)
                    q = row.size();
                entries.push_back(std::stoi(row.substr(p, q - p)));
                p = q + 1;
            }
        } else {
            for (char c : row) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("bad tableau text: " + s);
                entries.push_back(c - '0');
            }
        }
        rows.push_back(std::move(entries));
        pos = next + 1;
    }
    return from_rows(rows);
}

std::vector<std::vector<int>> StandardTableau::rows() const { return grid_of(shape_, cells_, 0); }

std::string StandardTableau::str() const { return rows_text(rows(), size()); }

SkewTableau::SkewTableau(Partition outer, Partition inner, std::vector<Cell> cells)
    : outer_(std::move(outer)), inner_(std::move(inner)), cells_(std::move(cells))
{
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape not nested");
    if (static_cast<int>(cells_.size()) != outer_.size() - inner_.size())
        throw std::invalid_argument("skew tableau size mismatch");
    auto g = grid_of(outer_, cells_, 0);
    for (int i = 0; i < outer_.length(); ++i)
        for (int j = 0; j < outer_.row_length(i); ++j) {
            bool in_inner = j < inner_.row_length(i);
            if (in_inner != (g[i][j] == 0))
                throw std::invalid_argument("skew tableau does not fill the skew shape");
            if (in_inner)
                continue;
            if (j > 0 && g[i][j - 1] > g[i][j])
                throw std::invalid_argument("skew tableau rows must increase");
            if (i > 0 && g[i - 1][j] > g[i][j])
                throw std::invalid_argument("skew tableau columns must increase");
        }
}

std::string SkewTableau::str() const
{
    auto g = grid_of(outer_, cells_, 0);
    std::string s;
    bool wide = size() > 9;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i)
            s += '/';
        for (std::size_t j = 0; j < g[i].size(); ++j) {
            if (wide && j)
                s += ',';
            s += g[i][j] == 0 ? std::string(".") : std::to_string(g[i][j]);
        }
    }
    return s;
}

int content_of(const StandardTableau& t, int k) { return t.cell(k).content(); }

int axial_distance(const StandardTableau& t, int k)
{
    if (k < 1 || k >= t.size())
        throw std::out_of_range("axial_distance: k out of range");
    return content_of(t, k) - content_of(t, k + 1);
}

std::optional<StandardTableau> adjacent_swap(const StandardTableau& t, int k)
{
    if (k < 1 || k >= t.size())
        throw std::out_of_range("adjacent_swap: k out of range");
    Cell a = t.cell(k), b = t.cell(k + 1);
    if (a.row == b.row || a.col == b.col)
        return std::nullopt;
    std::vector<Cell> cells = t.cells();
    std::swap(cells[k - 1], cells[k]);
    return StandardTableau(t.shape(), std::move(cells));
}

bool last_letter_less(const StandardTableau& a, const StandardTableau& b)
{
    for (int k = a.size(); k >= 1; --k) {
        int ra = a.cell(k).row, rb = b.cell(k).row;
        if (ra != rb)
            return ra > rb;
    }
    return false;
}

namespace {

void last_letter_rec(const Partition& shape, std::vector<Cell>& cells, std::vector<std::vector<Cell>>& out)
{
    int n = shape.size();
    if (n == 0) {
        out.push_back(cells);
        return;
    }
    // corner holding n, by increasing content: lower rows first
    for (auto& sub : subpartitions(shape)) {
        cells[n - 1] = sub.cell;
        last_letter_rec(sub.shape, cells, out);
    }
}

} // namespace

std::vector<StandardTableau> enumerate_last_letter(const Partition& lambda)
{
    std::vector<std::vector<Cell>> raw;
    std::vector<Cell> cells(lambda.size());
    last_letter_rec(lambda, cells, raw);
    std::vector<StandardTableau> out;
    out.reserve(raw.size());
    for (auto& c : raw)
        out.emplace_back(lambda, std::move(c));
    return out;
}

std::pair<StandardTableau, SkewTableau> split(const StandardTableau& t, int r)
{
    if (r < 0 || r > t.size())
        throw std::out_of_range("split: r out of range");
    std::vector<int> parts;
    for (int k = 1; k <= r; ++k) {
        Cell c = t.cell(k);
        if (c.row >= static_cast<int>(parts.size()))
            parts.resize(c.row + 1, 0);
        ++parts[c.row];
    }
    std::vector<Cell> low(t.cells().begin(), t.cells().begin() + r);
    std::vector<Cell> high(t.cells().begin() + r, t.cells().end());
    Partition nu(parts);
    return {StandardTableau(nu, std::move(low)), SkewTableau(t.shape(), nu, std::move(high))};
}

StandardTableau join(const StandardTableau& u, const SkewTableau& v)
{
    if (u.shape() != v.inner_shape())
        throw std::invalid_argument("join: shapes do not match");
    std::vector<Cell> cells = u.cells();
    cells.insert(cells.end(), v.cells().begin(), v.cells().end());
    return StandardTableau(v.outer_shape(), std::move(cells));
}

} // namespace symrep
