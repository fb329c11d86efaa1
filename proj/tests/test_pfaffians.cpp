#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cells.hpp"
#include "pfaffians.hpp"
#include "so2n.hpp"
#include "support.hpp"

using namespace ogr;
using namespace testing_support;

namespace {

SkewMatrix skew4(std::initializer_list<std::pair<std::pair<int, int>, Rational>> upper) {
    QMatrix m(4, 4);
    for (const auto& [ij, v] : upper) {
        m.at1(ij.first, ij.second) = v;
        m.at1(ij.second, ij.first) = -v;
    }
    return SkewMatrix(std::move(m));
}

}  // namespace

TEST_CASE("sub-Pfaffians agree with the matching expansion") {
    std::mt19937_64 rng(1);
    const SkewMatrix a = rand_skew(rng, 6);
    for (const auto& e : pfaffian_vector(a)) {
        CHECK(e.pf == pf_sub(a, e.subset));
        CHECK(e.pf == matching_pfaffian(a.matrix().select(e.subset, e.subset)));
        CHECK(e.pf * e.pf == det(a.matrix().select(e.subset, e.subset)));
    }
    CHECK(pfaffian_vector(a).size() == 32);
    CHECK(pf_sub(a, {1, 2, 3}) == 0);
    CHECK(pf_sub(a, {}) == 1);
    CHECK_THROWS_AS(pf_sub(a, {2, 1}), Error);
}

TEST_CASE("vector order and spinor scaling") {
    std::mt19937_64 rng(2);
    const SkewMatrix a = rand_skew(rng, 4);
    const auto v = pfaffian_vector(a);
    CHECK(v[0].subset.empty());
    CHECK(v[1].subset == std::vector<int>{1, 2});
    CHECK(v[6].subset == std::vector<int>{3, 4});
    CHECK(v[7].subset == std::vector<int>{1, 2, 3, 4});
    for (const auto& e : v) {
        const long scale = 1L << (e.subset.size() / 2);
        CHECK(e.spinor == e.sign * scale * e.pf);
    }
}

TEST_CASE("sign conventions") {
    CHECK(subset_sign({1, 2}, 4) == 1);
    CHECK(subset_sign({1, 3}, 4) == -1);
    CHECK(subset_sign({2, 3}, 4) == 1);
    CHECK(subset_sign({1, 4}, 4) == 1);
    CHECK(subset_sign({1, 2, 3, 4}, 4) == 1);
    // sgn(I) is the sign of the shuffle putting I first
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k <= n; k += 2)
            for (const auto& s : subsets(n, k)) CHECK(subset_sign(s, n) == shuffle_sign(s, n));
}

TEST_CASE("Pfaffians of positive points follow the sign pattern") {
    std::mt19937_64 rng(3);
    for (int n = 3; n <= 6; ++n)
        for (int rep = 0; rep < 4; ++rep) {
            const auto t = rand_params(rng, static_cast<std::size_t>(n * (n - 1) / 2));
            const SkewMatrix a = *marsh_rietsch(n, t).A;
            CHECK(check_sign_pattern(a, true).ok);
        }
}

TEST_CASE("boundary points satisfy the weak pattern") {
    std::mt19937_64 rng(4);
    for (const auto& c : cells_in_chart(4)) {
        const auto t = rand_params(rng, static_cast<std::size_t>(cell_dimension(c)));
        CHECK(check_sign_pattern(*sample_cell(c, t).A, false).ok);
    }
}

TEST_CASE("regression matrices") {
    const SkewMatrix a1 = skew4({{{1, 4}, 2}, {{3, 4}, -2}});
    const auto r1 = check_sign_pattern(a1, false);
    CHECK_FALSE(r1.ok);
    REQUIRE(r1.witness);
    CHECK(*r1.witness == std::vector<int>{3, 4});

    const SkewMatrix a3 = skew4({{{1, 4}, 2}, {{2, 3}, 1}, {{3, 4}, 2}});
    CHECK(check_sign_pattern(a3, false).ok);
    CHECK_FALSE(check_sign_pattern(a3, true).ok);
}

TEST_CASE("diagonal conjugation") {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 6; ++n) {
        const SkewMatrix a = rand_skew(rng, n);
        const SkewMatrix b = diag_conjugate(a);
        for (int k = 0; k <= n; k += 2)
            for (const auto& s : subsets(n, k)) {
                int evens = 0;
                for (int i : s) evens += i % 2 == 0;
                CHECK(pf_sub(b, s) == (evens % 2 ? -1 : 1) * pf_sub(a, s));
            }
    }
}

TEST_CASE("negated conjugate of a positive point has positive Pfaffians") {
    std::mt19937_64 rng(6);
    for (int n = 3; n <= 6; ++n) {
        const auto t = rand_params(rng, static_cast<std::size_t>(n * (n - 1) / 2));
        const SkewMatrix b = diag_conjugate(*marsh_rietsch(n, t).A);
        QMatrix m = b.matrix();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
        for (const auto& e : pfaffian_vector(SkewMatrix(m))) CHECK(e.pf > 0);
    }
}
