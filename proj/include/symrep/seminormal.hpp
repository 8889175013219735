#pragma once

#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"
#include "symrep/tableau.hpp"

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace symrep {

// orthogonal: symmetric, off-diagonal sqrt(1 - a^2).
// young: rational, off-diagonal 1 - a in the row of the tableau whose diagonal is a.
// In both, the diagonal at T for s_k is a = 1/(c_{k+1}(T) - c_k(T)).
// The two are conjugate by a diagonal matrix, so diagonals agree.
enum class SeminormalForm { orthogonal, young };

std::string to_string(SeminormalForm form);
SeminormalForm parse_form(const std::string& text);

struct SeminormalOptions {
    SeminormalForm form = SeminormalForm::orthogonal;
    // rep_matrix refuses larger shapes
    std::size_t max_dimension = 20000;
    // block recursion bottoms out in a dense matrix at or below this size
    std::size_t dense_threshold = 512;
};

// Last-letter ordered tableaux of a shape with the s_k action precomputed.
class TableauBasis {
public:
    static std::shared_ptr<const TableauBasis> of(const Partition& lambda);

    const Partition& shape() const { return shape_; }
    int dimension() const { return dim_; }
    const StandardTableau& tableau(int i) const { return tableaux_[i]; }
    const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
    // 0-based index of s_k T_i, or -1 when undefined
    int partner(int k, int i) const { return partner_[(k - 1) * dim_ + i]; }
    // c_{k+1}(T_i) - c_k(T_i)
    int content_gap(int k, int i) const { return gap_[(k - 1) * dim_ + i]; }
    int index_of(const StandardTableau& t) const;

private:
    Partition shape_;
    int dim_ = 0;
    std::vector<StandardTableau> tableaux_;
    std::vector<int> partner_;
    std::vector<int> gap_;
};

template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(Partition shape, int dim) : shape_(std::move(shape)), dim_(dim), a_(std::size_t(dim) * dim, T(0)) {}

    static DenseMatrix identity(Partition shape, int dim)
    {
        DenseMatrix m(std::move(shape), dim);
        for (int i = 0; i < dim; ++i)
            m(i, i) = T(1);
        return m;
    }

    const Partition& shape() const { return shape_; }
    int dimension() const { return dim_; }
    // 0-based
    T& operator()(int i, int j) { return a_[std::size_t(i) * dim_ + j]; }
    const T& operator()(int i, int j) const { return a_[std::size_t(i) * dim_ + j]; }

    DenseMatrix operator*(const DenseMatrix& o) const
    {
        DenseMatrix out(shape_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0)
                    continue;
                for (int j = 0; j < dim_; ++j)
                    out(i, j) += x * o(k, j);
            }
        return out;
    }

    DenseMatrix transpose() const
    {
        DenseMatrix out(shape_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

private:
    Partition shape_;
    int dim_ = 0;
    std::vector<T> a_;
};

using RepMatrix = DenseMatrix<double>;
using ExactRepMatrix = DenseMatrix<Rational>;

double max_abs_difference(const RepMatrix& a, const RepMatrix& b);
// one row per line, 17 significant digits
void dump(const RepMatrix& m, std::ostream& os);
std::string dump(const RepMatrix& m);

RepMatrix adjacent_matrix(const Partition& lambda, int k, const SeminormalOptions& opt = {});
RepMatrix rep_matrix(const Partition& lambda, const Permutation& sigma, const SeminormalOptions& opt = {});
// young form with exact rational entries
ExactRepMatrix rep_matrix_exact(const Partition& lambda, const Permutation& sigma,
                                std::size_t max_dimension = 20000);

// u is exact; the index set is {1..floor(u dim lambda)}.
double partial_trace(const Partition& lambda, const Permutation& sigma, const Rational& u,
                     const SeminormalOptions& opt = {});
double total_sum(const Partition& lambda, const Permutation& sigma, const SeminormalOptions& opt = {});
Rational total_sum_exact(const Partition& lambda, const Permutation& sigma);
double partial_sum(const Partition& lambda, const Permutation& sigma, const Rational& u,
                   const SeminormalOptions& opt = {});
// rows up to u1, columns up to u2; dense only
double partial_sum_rect(const Partition& lambda, const Permutation& sigma, const Rational& u1,
                        const Rational& u2, const SeminormalOptions& opt = {});

// TS^lambda(sigma) = sum over cycle types rho of S_r of c_rho * chi-hat^lambda_rho,
// c_rho = |class rho| * E_r[chi-hat^nu_rho TS^nu(sigma)].  Valid for |lambda| >= r.
struct TotalSumExpansion {
    Permutation sigma;
    int r = 0;
    SeminormalForm form = SeminormalForm::orthogonal;
    std::vector<std::pair<CycleType, double>> terms;
    // young form only
    std::vector<std::pair<CycleType, Rational>> exact_terms;

    double evaluate(const Partition& lambda) const;
    Rational evaluate_exact(const Partition& lambda) const;
};

// r = 0 means the smallest r with sigma in S_r (at least 1).
TotalSumExpansion total_sum_expansion(const Permutation& sigma, SeminormalForm form, int r = 0);

// TS^lambda(sigma) = sum_{nu |- r} TS^nu(sigma) dim nu dim(lambda/nu) / dim lambda
double total_sum_via_skew(const Partition& lambda, const Permutation& sigma, int r, const SeminormalOptions& opt = {});

struct MainTerm {
    Partition shape;
    Rational weight;
    double value = 0;
};

struct TraceDecomposition {
    std::vector<MainTerm> main_terms;
    int bar_j = 1;
    double bar_u = 0;
    Rational bar_u_exact;
    double remainder_value = 0;

    double main_value() const;
    double total() const { return main_value() + remainder_value; }
};

// At u = 1 every subpartition is a main term, bar_j = d, bar_u = 0 and the
// remainder is 0.
TraceDecomposition decompose_partial_trace(const Partition& lambda, const Permutation& sigma, const Rational& u,
                                           const SeminormalOptions& opt = {});
TraceDecomposition decompose_partial_sum(const Partition& lambda, const Permutation& sigma, const Rational& u,
                                         const SeminormalOptions& opt = {});

struct DecompositionLevel {
    Partition shape;
    Rational u;
    // dim shape / dim lambda
    Rational weight;
    // main term normalised by dim shape
    double main_value = 0;
};

struct IteratedDecomposition {
    // from lambda downwards
    std::vector<DecompositionLevel> levels;
    Partition terminal_shape;
    Rational terminal_u;
    Rational terminal_weight;
    double terminal_value = 0;

    double reconstruct() const;
};

IteratedDecomposition iterated_decomposition(const Partition& lambda, const Permutation& sigma, const Rational& u,
                                             int s, const SeminormalOptions& opt = {});

// Entries vanish across different skew parts V of split(T, r) and agree with
// pi^nu(sigma) within a skew part.  r = 0 uses sigma.degree().
bool block_restriction_check(const Partition& lambda, const Permutation& sigma, int r = 0,
                             const SeminormalOptions& opt = {}, double tol = 1e-9);

} // namespace symrep
