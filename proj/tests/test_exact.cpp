#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exact.hpp"
#include "support.hpp"

using namespace ogr;
using namespace testing_support;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
    CHECK(parse_rational("+5/10") == Rational(1, 2));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("2/-3"), Error);
    try {
        parse_rational("7/0");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::argument);
    }
}

TEST_CASE("polynomial arithmetic") {
    const Poly a = Poly::from_coeffs({1, 2});       // 1 + 2e
    const Poly b = Poly::from_coeffs({-1, 0, 3});   // -1 + 3e^2
    CHECK((a * b) == Poly::from_coeffs({-1, -2, 3, 6}));
    CHECK((a + b) == Poly::from_coeffs({0, 2, 3}));
    CHECK((a - a).is_zero());
    CHECK(Poly::from_coeffs({0, 0, 0}).is_zero());
    CHECK(b.eval(2) == 11);
    CHECK(to_string(b) == "[-1, 0, 3]");
    CHECK(parse_poly("[-1, 0, 3]") == b);
    CHECK(parse_poly("[]").is_zero());

    const auto lt = lowest_term(Poly::from_coeffs({0, 0, -16, 5}));
    REQUIRE(lt);
    CHECK(lt->degree == 2);
    CHECK(lt->coeff == -16);
    CHECK_FALSE(lowest_term(Poly()));
}

TEST_CASE("interpolation recovers a polynomial") {
    const Poly p = Poly::from_coeffs({Rational(1, 3), 0, -2, 7, 1});
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 5; ++i) {
        xs.emplace_back(i);
        ys.push_back(p.eval(i));
    }
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(11);
    for (int size = 1; size <= 6; ++size)
        for (int rep = 0; rep < 10; ++rep) {
            QMatrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rep % 3 == 0 && (i + j) % 3 == 0 ? Rational(0) : rand_rational(rng);
            CHECK(det(m) == leibniz_det(m));
        }
    QMatrix singular(3, 3);
    singular.at1(1, 2) = 1;
    singular.at1(2, 3) = 1;
    CHECK(det(singular) == 0);
    CHECK(det(QMatrix(0, 0)) == 1);
}

TEST_CASE("polynomial determinant matches evaluation") {
    std::mt19937_64 rng(5);
    PMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m(i, j) = Poly::from_coeffs({rand_rational(rng), rand_rational(rng), rand_rational(rng)});
    const Poly d = det(m);
    CHECK(d.degree() <= 8);
    for (int x = -3; x <= 12; ++x) CHECK(d.eval(x) == det(evaluate(m, x)));
}

TEST_CASE("minors validate indices") {
    QMatrix m = QMatrix::identity(3);
    CHECK(minor(m, {1, 3}, {1, 3}) == 1);
    CHECK(minor(m, {1, 2}, {2, 3}) == 0);
    CHECK_THROWS_AS(minor(m, {2, 1}, {1, 2}), Error);
    CHECK_THROWS_AS(minor(m, {1, 4}, {1, 2}), Error);
    CHECK_THROWS_AS(minor(m, {1}, {1, 2}), Error);
}

TEST_CASE("Pfaffian agrees with the matching expansion") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 8; n += 2)
        for (int rep = 0; rep < 5; ++rep) {
            const SkewMatrix a = rand_skew(rng, n);
            CHECK(pfaffian(a.matrix()) == matching_pfaffian(a.matrix()));
        }
    QMatrix m(4, 4);
    m.at1(1, 2) = 1; m.at1(2, 1) = -1;
    m.at1(3, 4) = 1; m.at1(4, 3) = -1;
    CHECK(pfaffian(m) == 1);
    CHECK_THROWS_AS(pfaffian(QMatrix(3, 3)), Error);
}

TEST_CASE("Pfaffian squared equals determinant") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 * (1 + rep % 4);
        const SkewMatrix a = rand_skew(rng, n);
        const Rational pf = pfaffian(a.matrix());
        CHECK(pf * pf == det(a.matrix()));
    }
}

TEST_CASE("skew matrices are validated") {
    QMatrix m(2, 2);
    m.at1(1, 2) = 1;
    m.at1(2, 1) = 1;
    try {
        SkewMatrix bad(m);
        FAIL("accepted a symmetric matrix");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_skew);
    }
    m.at1(2, 1) = -1;
    CHECK_NOTHROW(SkewMatrix{m});
    QMatrix diag(2, 2);
    diag.at1(1, 1) = 1;
    CHECK_THROWS_AS(SkewMatrix{diag}, Error);
    CHECK_THROWS_AS(SkewMatrix{QMatrix(2, 3)}, Error);
}

TEST_CASE("subsets") {
    CHECK(subsets(4, 2).size() == 6);
    CHECK(subsets(4, 2).front() == std::vector<int>{1, 2});
    CHECK(subsets(4, 2).back() == std::vector<int>{3, 4});
    CHECK(subsets(5, 0).size() == 1);
    CHECK(subsets(3, 4).empty());
}
