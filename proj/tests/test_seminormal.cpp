#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "symrep/characters.hpp"
#include "symrep/random.hpp"
#include "symrep/seminormal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace symrep;

namespace {

const double r89 = std::sqrt(8.0 / 9), r34 = std::sqrt(3.0 / 4), r29 = std::sqrt(2.0 / 9),
             r23 = std::sqrt(2.0 / 3), r112 = std::sqrt(1.0 / 12);

RepMatrix from_rows(const std::vector<std::vector<double>>& rows)
{
    RepMatrix m(Partition::parse("3,2"), static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m(int(i), int(j)) = rows[i][j];
    return m;
}

std::vector<double> flat(const RepMatrix& m)
{
    std::vector<double> out;
    for (int i = 0; i < m.dimension(); ++i)
        for (int j = 0; j < m.dimension(); ++j)
            out.push_back(m(i, j));
    return out;
}

Permutation random_perm(int n, Rng& rng)
{
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i)
        img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

SeminormalOptions with(SeminormalForm f)
{
    SeminormalOptions o;
    o.form = f;
    return o;
}

} // namespace

TEST_CASE("adjacent factors of (3,2)")
{
    auto s3 = from_rows({{-1.0 / 3, r89, 0, 0, 0},
                         {r89, 1.0 / 3, 0, 0, 0},
                         {0, 0, 1, 0, 0},
                         {0, 0, 0, 1, 0},
                         {0, 0, 0, 0, -1}});
    auto s2 = from_rows({{1, 0, 0, 0, 0},
                         {0, -0.5, r34, 0, 0},
                         {0, r34, 0.5, 0, 0},
                         {0, 0, 0, -0.5, r34},
                         {0, 0, 0, r34, 0.5}});
    Partition l = Partition::parse("3,2");
    CHECK(max_abs_difference(adjacent_matrix(l, 3), s3) < 1e-12);
    CHECK(max_abs_difference(adjacent_matrix(l, 2), s2) < 1e-12);
    CHECK(max_abs_difference(rep_matrix(l, Permutation::parse("(3,4)")), s3) < 1e-12);
}

TEST_CASE("orthogonal matrix of (2,4,3)")
{
    auto want = from_rows({{-1.0 / 3, -r29, r23, 0, 0},
                           {r89, -1.0 / 6, r112, 0, 0},
                           {0, r34, 0.5, 0, 0},
                           {0, 0, 0, -0.5, r34},
                           {0, 0, 0, -r34, -0.5}});
    Partition l = Partition::parse("3,2");
    auto got = rep_matrix(l, Permutation::parse("(2,4,3)"));
    CHECK(max_abs_difference(got, want) < 1e-12);
    CHECK(got(0, 2) == doctest::Approx(r23).epsilon(1e-14));
    CHECK(got(4, 3) == doctest::Approx(-r34).epsilon(1e-14));
    double sum = 0;
    for (double x : flat(want))
        sum += x;
    CHECK(std::abs(total_sum(l, Permutation::parse("(2,4,3)")) - sum / 5) < 1e-12);
}

TEST_CASE("trivial shapes and identity")
{
    auto m = adjacent_matrix(Partition::parse("4"), 2);
    REQUIRE(m.dimension() == 1);
    CHECK(m(0, 0) == 1);
    auto sgn = adjacent_matrix(Partition::parse("1,1,1"), 1);
    CHECK(sgn(0, 0) == -1);
    for (const auto& l : enumerate_partitions(6))
        for (auto f : {SeminormalForm::orthogonal, SeminormalForm::young}) {
            auto id = rep_matrix(l, Permutation::identity(6), with(f));
            CHECK(max_abs_difference(id, RepMatrix::identity(l, id.dimension())) == 0);
            CHECK(total_sum(l, Permutation(), with(f)) == doctest::Approx(1.0));
        }
}

TEST_CASE("partial trace and partial sum fixtures")
{
    Partition l = Partition::parse("3,2");
    CHECK(partial_trace(l, Permutation::parse("(2,3)"), Rational(2, 5)) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(partial_trace(l, Permutation::parse("(2,3)"), Rational(0)) == 0);
    CHECK(partial_trace(l, Permutation::parse("(2,3)"), Rational(1)) == doctest::Approx(1.0 / 5));
    for (auto u : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(4, 5), Rational(1)}) {
        double want = std::floor(to_double(u * 5) + 1e-12) / 5;
        CHECK(partial_sum(l, Permutation(), u) == doctest::Approx(want));
    }
}

TEST_CASE("homomorphism against an independent matrix product")
{
    Rng rng(7);
    for (int n = 2; n <= 6; ++n)
        for (const auto& l : enumerate_partitions(n))
            for (auto f : {SeminormalForm::orthogonal, SeminormalForm::young})
                for (int rep = 0; rep < 5; ++rep) {
                    auto a = random_perm(n, rng), b = random_perm(n, rng);
                    auto ma = rep_matrix(l, a, with(f)), mb = rep_matrix(l, b, with(f));
                    auto prod = oracle::matmul(flat(ma), flat(mb), ma.dimension());
                    auto ab = flat(rep_matrix(l, a * b, with(f)));
                    double err = 0;
                    for (std::size_t i = 0; i < ab.size(); ++i)
                        err = std::max(err, std::abs(ab[i] - prod[i]));
                    CHECK(err < 1e-9);
                    auto back = rep_matrix(l, a, with(f)) * rep_matrix(l, a.inverse(), with(f));
                    CHECK(max_abs_difference(back, RepMatrix::identity(l, back.dimension())) < 1e-9);
                }
}

TEST_CASE("orthogonal form is orthogonal and traces are characters")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& l : enumerate_partitions(n))
            for (const auto& p : all_permutations(n)) {
                auto m = rep_matrix(l, p);
                auto mt = m * m.transpose();
                REQUIRE(max_abs_difference(mt, RepMatrix::identity(l, m.dimension())) < 1e-9);
                double tr = 0;
                for (int i = 0; i < m.dimension(); ++i)
                    tr += m(i, i);
                REQUIRE(tr == doctest::Approx(character(l, p.cycle_type()).get_d()).epsilon(1e-9));
            }
}

TEST_CASE("young form: exact matrices and diagonal agreement")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n))
            for (const auto& p : all_permutations(n)) {
                auto y = rep_matrix(l, p, with(SeminormalForm::young));
                auto e = rep_matrix_exact(l, p);
                auto o = rep_matrix(l, p);
                Rational ts = 0;
                for (int i = 0; i < y.dimension(); ++i) {
                    CHECK(y(i, i) == doctest::Approx(o(i, i)));
                    for (int j = 0; j < y.dimension(); ++j) {
                        CHECK(y(i, j) == doctest::Approx(e(i, j).get_d()));
                        ts += e(i, j);
                    }
                }
                ts /= y.dimension();
                CHECK(total_sum_exact(l, p) == ts);
                CHECK(total_sum(l, p, with(SeminormalForm::young)) == doctest::Approx(ts.get_d()));
            }
}

TEST_CASE("block restriction")
{
    for (int n = 3; n <= 7; ++n)
        for (const auto& l : enumerate_partitions(n))
            for (int r = 2; r < n && r <= 4; ++r)
                for (const auto& p : all_permutations(r)) {
                    CHECK(block_restriction_check(l, p, r));
                    CHECK(block_restriction_check(l, p, r, with(SeminormalForm::young)));
                }
}

TEST_CASE("total sum: matrix, expansion and skew formula agree")
{
    for (auto f : {SeminormalForm::orthogonal, SeminormalForm::young})
        for (const auto& s : {"(1,2)", "(1,2,3)", "(1,3)", "(2,4,3)", "(1,4)(2,3)"}) {
            auto sigma = Permutation::parse(s);
            auto ex = total_sum_expansion(sigma, f, 4);
            for (int n = 4; n <= 7; ++n)
                for (const auto& l : enumerate_partitions(n)) {
                    double ts = total_sum(l, sigma, with(f));
                    CHECK(ex.evaluate(l) == doctest::Approx(ts).epsilon(1e-9));
                    CHECK(total_sum_via_skew(l, sigma, 4, with(f)) == doctest::Approx(ts).epsilon(1e-9));
                    if (f == SeminormalForm::young)
                        CHECK(ex.evaluate_exact(l) == total_sum_exact(l, sigma));
                }
        }
}

TEST_CASE("decomposition of partial trace and partial sum")
{
    Partition l = Partition::parse("4,3,1");
    auto sigma = Permutation::parse("(1,2,3)");
    auto at1 = decompose_partial_trace(l, sigma, Rational(1));
    CHECK(at1.bar_j == static_cast<int>(subpartitions(l).size()));
    CHECK(at1.remainder_value == 0);
    CHECK(at1.main_terms.size() == subpartitions(l).size());
    Rational w = 0;
    for (const auto& t : at1.main_terms)
        w += t.weight;
    CHECK(w == 1);
    auto at0 = decompose_partial_trace(l, sigma, Rational(0));
    CHECK(at0.total() == doctest::Approx(0.0));

    SeminormalOptions split_all;
    split_all.dense_threshold = 1;
    for (int n = 4; n <= 7; ++n)
        for (const auto& shape : enumerate_partitions(n))
            for (int k = 0; k <= 10; ++k) {
                Rational u(k, 10);
                auto pt = decompose_partial_trace(shape, sigma, u);
                CHECK(pt.total() == doctest::Approx(partial_trace(shape, sigma, u)).epsilon(1e-9));
                CHECK(partial_trace(shape, sigma, u, split_all) ==
                      doctest::Approx(partial_trace(shape, sigma, u)).epsilon(1e-9));
                auto ps = decompose_partial_sum(shape, sigma, u);
                CHECK(ps.total() == doctest::Approx(partial_sum(shape, sigma, u)).epsilon(1e-9));
                CHECK(partial_sum(shape, sigma, u, split_all) ==
                      doctest::Approx(partial_sum(shape, sigma, u)).epsilon(1e-9));
            }
}

TEST_CASE("iterated decomposition reconstructs the partial trace")
{
    auto sigma = Permutation::parse("(1,2)");
    for (const auto& l : enumerate_partitions(7))
        for (int k = 0; k <= 8; ++k) {
            Rational u(k, 8);
            auto it = iterated_decomposition(l, sigma, u, 3);
            CHECK(it.reconstruct() == doctest::Approx(partial_trace(l, sigma, u)).epsilon(1e-9));
        }
}

TEST_CASE("dump format")
{
    auto m = adjacent_matrix(Partition::parse("2,1"), 2);
    std::string s = dump(m);
    std::istringstream in(s);
    std::string line;
    int lines = 0;
    while (std::getline(in, line))
        ++lines;
    CHECK(lines == 2);
    CHECK(s.find("-0.5") != std::string::npos);
    CHECK(s.find("0.8660254037844386") != std::string::npos);
}
