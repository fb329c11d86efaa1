#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so2n.hpp"
#include "support.hpp"

using namespace ogr;
using namespace testing_support;

namespace {

// Reference X and A for n = 4 as functions of the six parameters.
QMatrix reference_x(const std::vector<Rational>& v) {
    const Rational t1 = v[0], t2 = v[1], t3 = v[2], t4 = v[3], t5 = v[4], t6 = v[5];
    const std::vector<std::vector<Rational>> rows{
        {1, t3, t3 * t5, 0, 0, 0, 0, t3 * t5 * t6},
        {0, 1, t2 + t5, t2 * t4, 0, 0, -t2 * t4 * t6, t2 * t6 + t5 * t6},
        {0, 0, 1, t4, 0, t1 * t4 * t5, -t1 * t4 - t4 * t6, t1 + t6},
        {0, 0, 0, 1, -t1 * t2 * t3, t1 * t2 + t1 * t5, -t1 - t6, 0},
    };
    QMatrix x(4, 8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 8; ++j) x(i, j) = rows[i][j];
    return x;
}

QMatrix reference_a(const std::vector<Rational>& v) {
    const Rational t1 = v[0], t2 = v[1], t3 = v[2], t4 = v[3], t5 = v[4], t6 = v[5];
    const std::vector<std::vector<Rational>> rows{
        {0, t1 * t2 * t3 * t4 * t5, -t1 * t2 * t3 * t4, t1 * t2 * t3},
        {-t1 * t2 * t3 * t4 * t5, 0, t1 * t2 * t4, -t1 * t2 - t1 * t5},
        {t1 * t2 * t3 * t4, -t1 * t2 * t4, 0, t1 + t6},
        {-t1 * t2 * t3, t1 * t2 + t1 * t5, -t1 - t6, 0},
    };
    QMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = rows[i][j];
    return a;
}

}  // namespace

TEST_CASE("generators lie in the group") {
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i) {
            CHECK(in_group(x_gen(n, i, rand_rational(rng))));
            CHECK(in_group(sdot(n, i)));
            CHECK(in_group(sdot(n, i).transpose()));
        }
    QMatrix bad = QMatrix::identity(4);
    bad.at1(1, 1) = 2;
    CHECK_FALSE(in_group(bad));
}

TEST_CASE("one-parameter subgroups") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const Rational s = rand_rational(rng), t = rand_rational(rng);
        for (int i = 1; i <= 4; ++i) CHECK(x_gen(4, i, s) * x_gen(4, i, t) == x_gen(4, i, s + t));
    }
}

TEST_CASE("generator entries") {
    const QMatrix x = x_gen(4, 2, 5);
    CHECK(x.at1(2, 3) == 5);
    CHECK(x.at1(7, 6) == -5);
    const QMatrix y = x_gen(4, 4, 5);
    CHECK(y.at1(3, 8) == 5);
    CHECK(y.at1(4, 7) == -5);
    const QMatrix s = sdot(4, 4);
    CHECK(s.at1(3, 8) == -1);
    CHECK(s.at1(8, 3) == 1);
    CHECK(s.at1(4, 7) == 1);
    CHECK(s.at1(7, 4) == -1);
}

TEST_CASE("parametrization reproduces the n = 4 reference matrices") {
    const std::vector<Rational> t{2, 3, 5, 7, 11, 13};
    const ChartPoint p = marsh_rietsch(4, t);
    CHECK(p.X == reference_x(t));
    REQUIRE(p.A);
    CHECK(p.A->matrix() == reference_a(t));
    CHECK((*p.A)(1, 2) == 2310);

    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        const auto s = rand_params(rng, 6);
        const ChartPoint q = marsh_rietsch(4, s);
        CHECK(q.X == reference_x(s));
        CHECK(q.A->matrix() == reference_a(s));
    }
}

TEST_CASE("chart round trip") {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 6; ++n) {
        const SkewMatrix a = rand_skew(rng, n);
        const ChartPoint p = from_skew(a);
        CHECK(is_isotropic(p.X));
        CHECK(chart(p) == a);
    }
}

TEST_CASE("points outside the chart") {
    const ChartPoint p = pi_n(sdot(2, 2));
    CHECK(is_isotropic(p.X));
    CHECK_FALSE(p.A);
    try {
        chart(p);
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_in_chart);
    }
}

TEST_CASE("sampled points are isotropic") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 3 + rep % 4;
        const auto t = rand_params(rng, static_cast<std::size_t>(n * (n - 1) / 2));
        const ChartPoint p = marsh_rietsch(n, t);
        CHECK(is_isotropic(p.X));
        REQUIRE(p.A);
        CHECK(is_isotropic(from_skew(*p.A).X));
    }
}

TEST_CASE("one-parameter family") {
    const PMatrix z = z_family(4);
    CHECK(z.rows() == 8);
    for (int e = 0; e <= 3; ++e) {
        const QMatrix g = evaluate(z, e);
        CHECK(in_group(g));
        CHECK(g == g.transpose());
    }
    CHECK(evaluate(z, 0) == QMatrix::identity(8));
}

TEST_CASE("parameter count is checked") {
    CHECK_THROWS_AS(marsh_rietsch(4, {1, 2, 3}), Error);
    CHECK_THROWS_AS(marsh_rietsch(1, {}), Error);
}
