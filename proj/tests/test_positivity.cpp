#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cells.hpp"
#include "positivity.hpp"
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

SkewMatrix a1() { return skew4({{{1, 4}, 2}, {{3, 4}, -2}}); }
SkewMatrix a2() { return skew4({{{1, 4}, 2}, {{3, 4}, 2}}); }
SkewMatrix a3() { return skew4({{{1, 4}, 2}, {{2, 3}, 1}, {{3, 4}, 2}}); }

// Closed forms of the six signed minors for n = 4.
Rational closed_form(const SkewMatrix& a, int j, int k) {
    auto x = [&](int r, int c) { return a(r, c); };
    if (j == 1 && k == 1) return x(1, 2) * x(1, 4) * x(2, 3) - x(1, 2) * x(1, 3) * x(2, 4) + x(1, 2) * x(1, 2) * x(3, 4);
    if (j == 1 && k == 2) return x(1, 3) * x(1, 3) * x(2, 4) - x(1, 3) * x(1, 4) * x(2, 3) - x(1, 2) * x(1, 3) * x(3, 4);
    if (j == 2 && k == 2) return x(1, 2) * x(1, 4);
    if (j == 1 && k == 3) return x(1, 4) * x(2, 3) * x(2, 3) - x(1, 3) * x(2, 3) * x(2, 4) + x(1, 2) * x(2, 3) * x(3, 4);
    if (j == 2 && k == 3) return x(1, 3) * x(2, 4) - x(1, 4) * x(2, 3);
    return x(1, 4);
}

Rational monomial_form(const std::vector<Rational>& t, int j, int k) {
    if (j == 1 && k == 1) return product(t, {{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 1}});
    if (j == 1 && k == 2) return product(t, {{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}});
    if (j == 2 && k == 2) return product(t, {{1, 2}, {2, 2}, {3, 2}, {4, 1}, {5, 1}});
    if (j == 1 && k == 3) return product(t, {{1, 2}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 1}});
    if (j == 2 && k == 3) return product(t, {{1, 2}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
    return product(t, {{1, 1}, {2, 1}, {3, 1}});
}

}  // namespace

TEST_CASE("index order") {
    using P = std::pair<int, int>;
    CHECK(minor_indices(4) == std::vector<P>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}});
    CHECK(minor_indices(6).size() == 15);
    CHECK(param_index(4, 1, 1) == 6);
    CHECK(param_index(4, 3, 3) == 1);
}

TEST_CASE("signed minors match closed forms for n = 4") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const SkewMatrix a = rand_skew(rng, 4);
        for (const auto& [j, k] : minor_indices(4)) CHECK(m_minor(a, j, k) == closed_form(a, j, k));
    }
}

TEST_CASE("signed minors are monomials on the parametrization") {
    const std::vector<Rational> t{2, 3, 5, 7, 11, 13};
    const SkewMatrix a = *marsh_rietsch(4, t).A;
    for (const auto& [j, k] : minor_indices(4)) CHECK(m_minor(a, j, k) == monomial_form(t, j, k));
    CHECK(m_minor(a, 1, 1) == 69369300);  // 2310^2 * 13
}

TEST_CASE("signed minors equal signed maximal minors of [Id | A]") {
    std::mt19937_64 rng(6);
    for (int n = 2; n <= 6; ++n) {
        const SkewMatrix a = rand_skew(rng, n);
        const QMatrix x = from_skew(a).X;
        std::vector<int> rows;
        for (int i = 1; i <= n; ++i) rows.push_back(i);
        for (const auto& [j, k] : minor_indices(n))
            CHECK(m_minor(a, j, k) == ((j * k) % 2 ? -1 : 1) * bridge_sign(n, j, k) * minor(x, rows, plucker_columns(n, j, k)));
    }
}

TEST_CASE("total positivity of sampled points") {
    std::mt19937_64 rng(12);
    for (int n = 2; n <= 6; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            const auto t = rand_params(rng, static_cast<std::size_t>(n * (n - 1) / 2));
            const SkewMatrix a = *marsh_rietsch(n, t).A;
            const auto r = is_totally_positive(a);
            CHECK(r.positive);
            CHECK(r.table.entries.size() == t.size());
            CHECK(recover_params(a) == t);
            CHECK(reconstruct(n, r.table) == a);
        }
    CHECK_FALSE(is_totally_positive(a2()).positive);
    CHECK_FALSE(is_totally_positive(SkewMatrix::zero(4)).positive);
}

TEST_CASE("exponent matrix is unimodular") {
    for (int n = 2; n <= 6; ++n) {
        const auto& e = exponent_matrix(n);
        const auto& inv = inverse_exponent_matrix(n);
        const std::size_t N = e.size();
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                long s = 0;
                for (std::size_t l = 0; l < N; ++l) s += e[i][l] * inv[l][j];
                CHECK(s == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("parameter recovery rejects boundary points") {
    CHECK_THROWS_AS(recover_params(a2()), Error);
}

TEST_CASE("nonnegativity on the reference matrices") {
    const auto r1 = is_totally_nonnegative(a1());
    CHECK(r1.verdict == Verdict::not_nonnegative);
    const std::vector<std::pair<long, int>> expected{{80, 5}, {40, 4}, {16, 2}, {80, 5}, {-16, 2}, {2, 0}};
    REQUIRE(r1.leading.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(r1.leading[i].term);
        CHECK(r1.leading[i].term->coeff == expected[i].first);
        CHECK(r1.leading[i].term->degree == expected[i].second);
    }
    REQUIRE(r1.witness);
    CHECK(*r1.witness == std::pair<int, int>{2, 3});

    const auto r2 = is_totally_nonnegative(a2());
    CHECK(r2.verdict == Verdict::nonnegative_boundary);
    CHECK_FALSE(r2.witness);

    const auto r3 = is_totally_nonnegative(a3());
    CHECK(r3.verdict == Verdict::not_nonnegative);
    REQUIRE(r3.witness);
    CHECK(*r3.witness == std::pair<int, int>{2, 3});
    CHECK(r3.leading[4].term->coeff == -2);
    CHECK(r3.leading[4].term->degree == 0);
    CHECK(m_minor(a3(), 2, 3) == -2);
}

TEST_CASE("second order term of the last minor") {
    const auto num = perturbed_numerators(a1());
    const Poly& den = num.back();
    CHECK(den.coeff(0) == 1);
    // M_{3,3}(B(eps)) = 2 + 8 eps + ..., also seen by evaluating the chart at small eps
    const Poly& n33 = num[5];
    CHECK(n33.coeff(0) == 2);
    CHECK(n33.coeff(1) - 2 * den.coeff(1) == 8);
    const Rational eps(1, 1000000);
    const ChartPoint p{4, from_skew(a1()).X * evaluate(z_family(4), eps), std::nullopt};
    const Rational slope = (m_minor(chart(p), 3, 3) - 2) / eps;
    CHECK(slope > Rational(79, 10));
    CHECK(slope < Rational(81, 10));
}

TEST_CASE("nonnegativity verdicts on sampled cells") {
    std::mt19937_64 rng(40);
    for (int n = 2; n <= 4; ++n)
        for (const auto& c : cells_in_chart(n)) {
            const auto t = rand_params(rng, static_cast<std::size_t>(cell_dimension(c)));
            const auto p = sample_cell(c, t);
            REQUIRE(p.A);
            const auto r = is_totally_nonnegative(*p.A);
            const bool top = cell_dimension(c) == n * (n - 1) / 2;
            CHECK(r.verdict == (top ? Verdict::positive : Verdict::nonnegative_boundary));
        }
}

TEST_CASE("negating a positive point breaks nonnegativity") {
    std::mt19937_64 rng(41);
    for (int n = 3; n <= 5; ++n) {
        const auto t = rand_params(rng, static_cast<std::size_t>(n * (n - 1) / 2));
        QMatrix m = marsh_rietsch(n, t).A->matrix();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
        CHECK(is_totally_nonnegative(SkewMatrix(m)).verdict == Verdict::not_nonnegative);
    }
}
