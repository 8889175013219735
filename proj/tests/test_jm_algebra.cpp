#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "symrep/characters.hpp"
#include "symrep/jm_algebra.hpp"
#include "symrep/random.hpp"

#include <algorithm>

using namespace symrep;

namespace {

oracle::PMap to_map(const PartialPermutation& p)
{
    oracle::PMap m;
    for (int x : p.support())
        m[x] = p(x);
    return m;
}

PartialPermutation random_pp(Rng& rng)
{
    std::vector<int> pts{1, 2, 3, 4, 5, 6};
    std::shuffle(pts.begin(), pts.end(), rng);
    int size = rng.uniform_int(0, 5);
    std::vector<int> support(pts.begin(), pts.begin() + size);
    std::vector<int> images = support;
    std::shuffle(images.begin(), images.end(), rng);
    return PartialPermutation(support, images);
}

Rational coeff(const AlphaExpansion& a, const char* rho)
{
    auto it = a.find(CycleType::parse(rho));
    return it == a.end() ? Rational(0) : it->second;
}

Permutation random_perm(int n, Rng& rng)
{
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i)
        img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

} // namespace

TEST_CASE("partial permutation products")
{
    auto t12 = PartialPermutation::transposition(1, 2);
    auto id3 = PartialPermutation({3}, {3});
    auto a = pp_multiply(t12, id3);
    CHECK(a.support() == std::vector<int>{1, 2, 3});
    CHECK(a(1) == 2);
    CHECK(a(3) == 3);

    auto sq = pp_multiply(t12, t12);
    CHECK(sq.support() == std::vector<int>{1, 2});
    CHECK(sq.type().parts() == std::vector<int>{1, 1});

    auto c = pp_multiply(t12, PartialPermutation::transposition(2, 3));
    CHECK(to_map(c) == oracle::pmap_multiply(to_map(t12), to_map(PartialPermutation::transposition(2, 3))));
    CHECK(c.type().parts() == std::vector<int>{3});

    Rng rng(4);
    for (int i = 0; i < 300; ++i) {
        auto x = random_pp(rng), y = random_pp(rng), z = random_pp(rng);
        CHECK(to_map(pp_multiply(x, y)) == oracle::pmap_multiply(to_map(x), to_map(y)));
        CHECK(pp_multiply(pp_multiply(x, y), z) == pp_multiply(x, pp_multiply(y, z)));
    }
}

TEST_CASE("Jucys-Murphy elements")
{
    CHECK(jm_element(1, 4).size() == 0);
    auto x2 = jm_element(2, 4);
    REQUIRE(x2.size() == 1);
    CHECK(x2.coefficient(PartialPermutation::transposition(1, 2)) == 1);
    CHECK(jm_element(4, 4).size() == 3);
}

TEST_CASE("alpha expansions of power sums")
{
    auto p1 = to_alpha(power_sum_jm(CycleType::parse("1"), 3));
    CHECK(coeff(p1, "2") == 1);
    CHECK(p1.size() == 1);

    auto p2 = to_alpha(power_sum_jm(CycleType::parse("2"), 4));
    CHECK(coeff(p2, "3") == 1);
    CHECK(coeff(p2, "1,1") == 1);

    auto p11 = to_alpha(power_sum_jm(CycleType::parse("1,1"), 4));
    CHECK(coeff(p11, "2,2") == 2);

    auto m1 = to_alpha(modified_power_sum_jm(CycleType::parse("1"), 3));
    CHECK(m1 == p1);
    auto m2 = to_alpha(modified_power_sum_jm(CycleType::parse("2"), 4));
    CHECK(coeff(m2, "1,1") == 0);
    CHECK(coeff(m2, "3") == 1);
    for (const auto& [rho, c] : m2)
        CHECK(rho.multiplicity(1) <= 3);
}

TEST_CASE("Catalan coefficients at n = k + 2")
{
    const int want[] = {1, 4, 30};
    for (int h = 1; h <= 3; ++h) {
        int k = 2 * h;
        auto a = to_alpha(power_sum_jm(CycleType(std::vector<int>{k}), k + 2));
        CycleType ones(std::vector<int>(h + 1, 1));
        CHECK(a.at(ones) == want[h - 1]);
        CHECK(a.at(ones) == catalan(h) * factorial(h));
    }
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(5) == 42);
}

TEST_CASE("top coefficient and degree bound of the modified expansion")
{
    for (const char* nu_text : {"1", "2", "1,1", "2,1", "3", "2,2"}) {
        CycleType nu = CycleType::parse(nu_text);
        int n = nu.length_degree() + 2;
        std::vector<int> top = nu.parts();
        for (int& x : top)
            ++x;
        BigInt mult = 1;
        for (int k = 1; k <= nu.size(); ++k)
            mult *= factorial(nu.multiplicity(k));
        CHECK(to_alpha(power_sum_jm(nu, n)).at(CycleType(top)) == mult);
        auto m = to_alpha(modified_power_sum_jm(nu, n));
        CHECK(m.at(CycleType(top)) == mult);
        for (const auto& [rho, c] : m) {
            CHECK(c > 0);
            CHECK(rho.kerov_degree() <= nu.length_degree());
            if (rho.kerov_degree() == nu.length_degree() && !(rho == CycleType(top)))
                CHECK(rho.multiplicity(1) > 0);
        }
    }
}

TEST_CASE("invariance under conjugation")
{
    Rng rng(8);
    auto p = power_sum_jm(CycleType::parse("2,1"), 6);
    auto q = modified_power_sum_jm(CycleType::parse("2"), 6);
    for (int i = 0; i < 20; ++i) {
        auto g = random_perm(6, rng);
        CHECK(p.conjugated(g) == p);
        CHECK(q.conjugated(g) == q);
    }
    FormalSum lopsided(4);
    lopsided.add(PartialPermutation::transposition(1, 2), 1);
    CHECK_THROWS_AS(to_alpha(lopsided), NotInvariant);
}

TEST_CASE("expansion budget")
{
    JmLimits tight;
    tight.max_terms = 10;
    CHECK_THROWS_AS(power_sum_jm(CycleType::parse("3"), 6, tight), ExpansionTooLarge);
}

TEST_CASE("projection to characters")
{
    AlphaExpansion one{{CycleType::parse("1"), 1}};
    CHECK(phi_n(one, Partition::parse("3,2")) == 5);
    AlphaExpansion two{{CycleType::parse("2"), 1}};
    CHECK(phi_n(two, Partition::parse("3,2")) == 2);
}

TEST_CASE("content evaluation")
{
    CHECK(content_eval(CycleType::parse("1"), Partition::parse("3,2")) == 2);
    for (int n = 1; n <= 9; ++n)
        CHECK(content_eval(CycleType::parse("1"), Partition(std::vector<int>{n})) == n * (n - 1) / 2);
    CHECK(content_eval(CycleType::parse("2,1"), Partition::parse("3,2")) == 6 * 2);
    // odd parts carry no correction
    CHECK(modified_content_eval(CycleType::parse("3"), Partition::parse("3,2")) ==
          content_eval(CycleType::parse("3"), Partition::parse("3,2")));
    // 6 - 1 * 5*4/2
    CHECK(modified_content_power(2, Partition::parse("3,2")) == -4);
}

TEST_CASE("Jucys identity")
{
    for (const char* nu_text : {"1", "2", "3", "1,1", "2,1", "4"}) {
        CycleType nu = CycleType::parse(nu_text);
        for (int n = std::max(2, nu.size() + nu.length()); n <= 6; ++n) {
            auto a = to_alpha(power_sum_jm(nu, n));
            auto m = to_alpha(modified_power_sum_jm(nu, n));
            for (const auto& l : enumerate_partitions(n)) {
                CHECK(phi_n(a, l) == Rational(content_eval(nu, l)));
                CHECK(phi_n(m, l) == modified_content_eval(nu, l));
            }
        }
    }
}

TEST_CASE("removing a corner changes the modified power sum by y^k minus a Catalan term")
{
    for (int n = 2; n <= 10; ++n)
        for (const auto& l : enumerate_partitions(n))
            for (int k = 1; k <= 6; ++k)
                for (const auto& s : subpartitions(l)) {
                    BigInt yk = 1;
                    for (int i = 0; i < k; ++i)
                        yk *= s.content;
                    Rational corr = k % 2 ? Rational(0) : Rational(catalan(k / 2) * falling_factorial(n - 1, k / 2));
                    CHECK(modified_content_power(k, l) - modified_content_power(k, s.shape) == yk - corr);
                }
}
