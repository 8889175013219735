#pragma once

#include "symrep/partition.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symrep {

class StandardTableau {
public:
    StandardTableau() = default;
    // cells[k-1] is the box holding k
    StandardTableau(Partition shape, std::vector<Cell> cells);

    static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);
    // "123/45", or "1,2,5/3,4" when entries exceed 9
    static StandardTableau parse(std::string_view text);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    Cell cell(int k) const { return cells_.at(k - 1); }
    const std::vector<Cell>& cells() const { return cells_; }
    std::vector<std::vector<int>> rows() const;
    std::string str() const;

    bool operator==(const StandardTableau& o) const { return cells_ == o.cells_; }

private:
    Partition shape_;
    std::vector<Cell> cells_;
};

// Filling of outer/inner by 1..|outer|-|inner|.
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(Partition outer, Partition inner, std::vector<Cell> cells);

    const Partition& outer_shape() const { return outer_; }
    const Partition& inner_shape() const { return inner_; }
    int size() const { return static_cast<int>(cells_.size()); }
    Cell cell(int k) const { return cells_.at(k - 1); }
    const std::vector<Cell>& cells() const { return cells_; }
    std::string str() const;

    bool operator==(const SkewTableau& o) const
    {
        return outer_ == o.outer_ && inner_ == o.inner_ && cells_ == o.cells_;
    }

private:
    Partition outer_;
    Partition inner_;
    std::vector<Cell> cells_;
};

int content_of(const StandardTableau& t, int k);
// c_k(T) - c_{k+1}(T)
int axial_distance(const StandardTableau& t, int k);
// Exchanges k and k+1; empty when the result is not standard.
std::optional<StandardTableau> adjacent_swap(const StandardTableau& t, int k);

// Last-letter order: at the largest entry whose row differs, the tableau
// with that entry in the lower row comes first.
bool last_letter_less(const StandardTableau& a, const StandardTableau& b);

std::vector<StandardTableau> enumerate_last_letter(const Partition& lambda);

std::pair<StandardTableau, SkewTableau> split(const StandardTableau& t, int r);
StandardTableau join(const StandardTableau& u, const SkewTableau& v);

} // namespace symrep
