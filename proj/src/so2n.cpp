#include "so2n.hpp"

namespace ogr {

namespace {

void check_rank(int n, int i) {
    if (n < 2) fail(Errc::argument, "rank must be at least 2");
    if (i < 1 || i > n) fail(Errc::argument, "generator index out of range");
}

// Multiply g on the right by x_i(t), acting on columns in place.
template <class T>
void right_mul_x(Matrix<T>& g, int n, int i, const T& t) {
    auto add_col = [&](int from, int to, const T& s) {
        for (std::size_t r = 0; r < g.rows(); ++r) {
            const T& v = g.at1(static_cast<int>(r) + 1, from);
            if (v == T(0)) continue;
            g.at1(static_cast<int>(r) + 1, to) += v * s;
        }
    };
    const T minus = T(0) - t;
    if (i < n) {
        add_col(i, i + 1, t);
        add_col(n + i + 1, n + i, minus);
    } else {
        add_col(n - 1, 2 * n, t);
        add_col(n, 2 * n - 1, minus);
    }
}

}  // namespace

QMatrix form_q(int n) {
    QMatrix q(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        q.at1(i, n + i) = 1;
        q.at1(n + i, i) = 1;
    }
    return q;
}

QMatrix phi(int n, int i, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    check_rank(n, i);
    QMatrix g = QMatrix::identity(static_cast<std::size_t>(2 * n));
    if (i < n) {
        g.at1(i, i) = a;
        g.at1(i, i + 1) = b;
        g.at1(i + 1, i) = c;
        g.at1(i + 1, i + 1) = d;
        g.at1(n + i, n + i) = d;
        g.at1(n + i, n + i + 1) = -c;
        g.at1(n + i + 1, n + i) = -b;
        g.at1(n + i + 1, n + i + 1) = a;
    } else {
        g.at1(n - 1, n - 1) = a;
        g.at1(n - 1, 2 * n) = b;
        g.at1(n, n) = a;
        g.at1(n, 2 * n - 1) = -b;
        g.at1(2 * n - 1, n) = -c;
        g.at1(2 * n - 1, 2 * n - 1) = d;
        g.at1(2 * n, n - 1) = c;
        g.at1(2 * n, 2 * n) = d;
    }
    return g;
}

QMatrix x_gen(int n, int i, const Rational& t) { return phi(n, i, 1, t, 0, 1); }

QMatrix sdot(int n, int i) { return phi(n, i, 0, -1, 1, 0); }

PMatrix x_gen_eps(int n, int i) {
    check_rank(n, i);
    PMatrix g = PMatrix::identity(static_cast<std::size_t>(2 * n));
    right_mul_x(g, n, i, Poly::monomial(1, 1));
    return g;
}

bool in_group(const QMatrix& g) {
    if (!g.square() || g.rows() % 2) return false;
    const QMatrix q = form_q(static_cast<int>(g.rows() / 2));
    return g.transpose() * q * g == q && det(g) == 1;
}

bool is_isotropic(const QMatrix& x) {
    if (x.cols() != 2 * x.rows()) return false;
    return (x * form_q(static_cast<int>(x.rows())) * x.transpose()).is_zero();
}

ChartPoint pi_n(const QMatrix& g) {
    if (!g.square() || g.rows() % 2) fail(Errc::dimension, "group element must be 2n x 2n");
    const int n = static_cast<int>(g.rows() / 2);
    ChartPoint p;
    p.n = n;
    std::vector<int> rows, cols;
    for (int i = 1; i <= n; ++i) rows.push_back(i);
    for (int j = 1; j <= 2 * n; ++j) cols.push_back(j);
    p.X = g.select(rows, cols);
    std::vector<int> left(rows);
    if (det(p.X.select(rows, left)) != 0) p.A = chart(p);
    return p;
}

ChartPoint from_skew(const SkewMatrix& a) {
    const int n = a.n();
    ChartPoint p;
    p.n = n;
    p.X = QMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        p.X.at1(i, i) = 1;
        for (int j = 1; j <= n; ++j) p.X.at1(i, n + j) = a(i, j);
    }
    p.A = a;
    return p;
}

SkewMatrix chart(const ChartPoint& p) {
    const int n = p.n;
    if (p.X.rows() != static_cast<std::size_t>(n) || p.X.cols() != static_cast<std::size_t>(2 * n))
        fail(Errc::dimension, "chart point must be n x 2n");
    // Gauss-Jordan on [L | R] until the left block is the identity.
    QMatrix m = p.X;
    const auto N = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t piv = k;
        while (piv < N && m(piv, k) == 0) ++piv;
        if (piv == N) fail(Errc::not_in_chart, "left n x n minor vanishes; point is outside the skew chart");
        if (piv != k)
            for (std::size_t j = 0; j < 2 * N; ++j) std::swap(m(k, j), m(piv, j));
        const Rational inv = 1 / m(k, k);
        for (std::size_t j = 0; j < 2 * N; ++j) m(k, j) *= inv;
        for (std::size_t i = 0; i < N; ++i) {
            if (i == k || m(i, k) == 0) continue;
            const Rational f = m(i, k);
            for (std::size_t j = 0; j < 2 * N; ++j) m(i, j) -= f * m(k, j);
        }
    }
    QMatrix a(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) a(i, j) = m(i, N + j);
    if (!is_skew(a)) fail(Errc::internal, "chart of an isotropic point is not skew-symmetric");
    return SkewMatrix(std::move(a));
}

ChartPoint marsh_rietsch(int n, const std::vector<Rational>& t) {
    const Word word = w0_coset_word(n);
    if (t.size() != word.size()) fail(Errc::dimension, "expected C(n,2) parameters");
    QMatrix g = QMatrix::identity(static_cast<std::size_t>(2 * n));
    for (std::size_t k = 0; k < word.size(); ++k) right_mul_x(g, n, word[k], t[k]);
    return pi_n(g);
}

PMatrix z_family(int n) {
    const Word word = w0_word(n);
    PMatrix z = PMatrix::identity(static_cast<std::size_t>(2 * n));
    const Poly eps = Poly::monomial(1, 1);
    for (int letter : word) right_mul_x(z, n, letter, eps);
    return z.transpose() * z;
}

ChartPoint deodhar_point(const SignedPerm& v, const SignedPerm& w, const std::vector<Rational>& t) {
    const CellWord cw = cell_word(v, w);
    const int n = cw.n;
    if (t.size() != static_cast<std::size_t>(cw.params()))
        fail(Errc::dimension, "expected l(w) - l(v) parameters");
    QMatrix g = QMatrix::identity(static_cast<std::size_t>(2 * n));
    std::size_t next = 0;
    for (std::size_t k = 0; k < cw.letters.size(); ++k) {
        if (cw.vmask[k])
            g = g * sdot(n, cw.letters[k]).transpose();
        else
            right_mul_x(g, n, cw.letters[k], t[next++]);
    }
    return pi_n(g);
}

}  // namespace ogr
