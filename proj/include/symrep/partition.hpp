#pragma once

#include "symrep/types.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace symrep {

// Box of a Young diagram, 0-based row and column.
struct Cell {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    auto operator<=>(const Cell&) const = default;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "6,4,3,3,2"; "" or "()" is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int row_length(int row) const;
    int column_length(int col) const;
    int hook(int row, int col) const;
    bool has_cell(int row, int col) const { return col >= 0 && col < row_length(row); }

    Partition conjugate() const { return Partition(conj_); }
    // true when every box of other lies in *this
    bool contains(const Partition& other) const;

    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> conj_;
    int n_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

// Outer contents y_1 < ... < y_d of removable boxes, inner contents
// x_1 < ... < x_{d+1} of addable boxes.
struct CornerData {
    std::vector<int> outer_contents;
    std::vector<int> inner_contents;
};

CornerData corners(const Partition& lambda);

struct Neighbour {
    Partition shape;
    int content;
    Cell cell;
};

// Partitions with one box removed (resp. added), by increasing content.
std::vector<Neighbour> subpartitions(const Partition& lambda);
std::vector<Neighbour> superpartitions(const Partition& lambda);

// Contents listed row by row.
std::vector<int> contents_multiset(const Partition& lambda);

BigInt dimension(const Partition& lambda);

// dim(inner) / dim(outer) for inner contained in outer.  Only hooks in rows
// and columns that differ are multiplied, so this stays cheap for large shapes.
Rational dimension_ratio(const Partition& inner, const Partition& outer);

// Standard fillings of outer/inner; 0 when inner is not contained in outer.
BigInt skew_dimension(const Partition& outer, const Partition& inner);

// Decreasing lexicographic order.
void for_each_partition(int n, const std::function<void(const Partition&)>& f);
std::vector<Partition> enumerate_partitions(int n);
// All partitions of size 0..n, by size then decreasing lex.
std::vector<Partition> partitions_up_to(int n);

} // namespace symrep
