#include "positivity.hpp"

#include <map>
#include <mutex>

#include "lgv.hpp"
#include "so2n.hpp"

namespace ogr {

namespace {

void check_jk(int n, int j, int k) {
    if (n < 2 || j < 1 || j > k || k > n - 1) fail(Errc::argument, "minor index (j,k) out of range");
}

Rational int_power(const Rational& base, long e) {
    Integer num = base.get_num(), den = base.get_den();
    if (e < 0) {
        std::swap(num, den);
        e = -e;
    }
    Integer pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rational r(pn, pd);
    r.canonicalize();
    return r;
}

struct ExponentData {
    std::vector<std::vector<long>> e, inv;
};

const ExponentData& exponent_data(int n) {
    static std::mutex mu;
    static std::map<int, ExponentData> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (n < 2) fail(Errc::argument, "rank must be at least 2");
    const Diagram d = build_top(n);
    const auto idx = minor_indices(n);
    const std::size_t N = idx.size();
    ExponentData data;
    const std::vector<Rational> ones(N, Rational(1));
    for (const auto& [j, k] : idx) {
        const auto colls = enumerate_collections(d, plucker_columns(n, j, k), true);
        if (colls.size() != 1) fail(Errc::internal, "expected a unique path collection for a signed minor");
        std::vector<long> row(N, 0);
        for (const auto& path : colls.front().paths)
            for (int a : path.arrows) ++row[static_cast<std::size_t>(d.steps[static_cast<std::size_t>(a)].param - 1)];
        const int s = ((j * k) % 2 ? -1 : 1) * bridge_sign(n, j, k);
        if (s * collection_weight(d, colls.front(), ones) != 1) fail(Errc::internal, "signed minor monomial has coefficient other than +1");
        data.e.push_back(std::move(row));
    }
    // Exact inverse over the rationals, then insist on integrality.
    QMatrix m(N, 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t c = 0; c < N; ++c) m(i, c) = data.e[i][c];
        m(i, N + i) = 1;
    }
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t p = c;
        while (p < N && m(p, c) == 0) ++p;
        if (p == N) fail(Errc::internal, "exponent matrix is singular");
        for (std::size_t x = 0; x < 2 * N; ++x) std::swap(m(c, x), m(p, x));
        const Rational piv = m(c, c);
        for (std::size_t x = 0; x < 2 * N; ++x) m(c, x) /= piv;
        for (std::size_t r = 0; r < N; ++r) {
            if (r == c || m(r, c) == 0) continue;
            const Rational f = m(r, c);
            for (std::size_t x = 0; x < 2 * N; ++x) m(r, x) -= f * m(c, x);
        }
    }
    data.inv.assign(N, std::vector<long>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t c = 0; c < N; ++c) {
            const Rational& q = m(i, N + c);
            if (q.get_den() != 1) fail(Errc::internal, "exponent matrix is not unimodular");
            data.inv[i][c] = q.get_num().get_si();
        }
    return cache.emplace(n, std::move(data)).first->second;
}

}  // namespace

std::vector<std::pair<int, int>> minor_indices(int n) {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= n - 1; ++k)
        for (int j = 1; j <= k; ++j) out.emplace_back(j, k);
    return out;
}

int param_index(int n, int j, int k) {
    check_jk(n, j, k);
    return n * (n - 1) / 2 - (k * (k - 1) / 2 + (j - 1));
}

std::vector<int> m_rows(int n, int j, int k) {
    check_jk(n, j, k);
    std::vector<int> r;
    for (int i = 1; i <= n - k - 1; ++i) r.push_back(i);
    for (int i = n - k + j; i <= n; ++i) r.push_back(i);
    return r;
}

std::vector<int> m_cols(int n, int j) {
    std::vector<int> c;
    for (int i = 1; i <= n - j; ++i) c.push_back(i);
    return c;
}

std::vector<int> plucker_columns(int n, int j, int k) {
    check_jk(n, j, k);
    std::vector<int> c;
    for (int i = n - k; i <= n - k + j - 1; ++i) c.push_back(i);
    for (int i = n + 1; i <= 2 * n - j; ++i) c.push_back(i);
    return c;
}

int bridge_sign(int n, int j, int k) { return (j * (n - 1 - k)) % 2 ? -1 : 1; }

Rational m_minor(const SkewMatrix& a, int j, int k) {
    const int n = a.n();
    const Rational d = minor(a.matrix(), m_rows(n, j, k), m_cols(n, j));
    return (j * k) % 2 ? Rational(-d) : d;
}

const Rational& MinorTable::at(int j, int k) const {
    for (const auto& e : entries)
        if (e.j == j && e.k == k) return e.value;
    fail(Errc::argument, "minor index (j,k) not in table");
}

MinorTable minor_table(const SkewMatrix& a) {
    MinorTable t;
    t.n = a.n();
    for (const auto& [j, k] : minor_indices(a.n())) t.entries.push_back({j, k, m_minor(a, j, k)});
    return t;
}

PositivityResult is_totally_positive(const SkewMatrix& a) {
    PositivityResult r;
    r.table = minor_table(a);
    r.positive = a.n() >= 2;
    for (const auto& e : r.table.entries)
        if (e.value <= 0) r.positive = false;
    return r;
}

const std::vector<std::vector<long>>& exponent_matrix(int n) { return exponent_data(n).e; }
const std::vector<std::vector<long>>& inverse_exponent_matrix(int n) { return exponent_data(n).inv; }

std::vector<Rational> params_from_table(const MinorTable& table) {
    const int n = table.n;
    const auto idx = minor_indices(n);
    if (table.entries.size() != idx.size()) fail(Errc::dimension, "minor table has the wrong size");
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (table.entries[r].j != idx[r].first || table.entries[r].k != idx[r].second)
            fail(Errc::argument, "minor table is not in reverse lexicographic order");
        if (table.entries[r].value == 0) fail(Errc::domain, "a signed minor vanishes; outside the recoverable locus");
    }
    const auto& inv = inverse_exponent_matrix(n);
    std::vector<Rational> t;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        Rational ti = 1;
        for (std::size_t r = 0; r < idx.size(); ++r)
            if (inv[i][r]) ti *= int_power(table.entries[r].value, inv[i][r]);
        t.push_back(ti);
    }
    return t;
}

std::vector<Rational> recover_params(const SkewMatrix& a) { return params_from_table(minor_table(a)); }

SkewMatrix reconstruct(int n, const MinorTable& table) {
    if (table.n != n) fail(Errc::dimension, "minor table rank mismatch");
    return chart(marsh_rietsch(n, params_from_table(table)));
}

std::vector<Poly> perturbed_numerators(const SkewMatrix& a) {
    const int n = a.n();
    if (n < 2) fail(Errc::argument, "rank must be at least 2");
    const PMatrix x = to_poly(from_skew(a).X) * z_family(n);
    std::vector<int> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(i);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> sets;
    const auto idx = minor_indices(n);
    for (const auto& [j, k] : idx) sets.emplace_back(rows, plucker_columns(n, j, k));
    sets.emplace_back(rows, rows);
    std::vector<Poly> polys = poly_minors(x, sets);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const auto [j, k] = idx[r];
        if (((j * k) % 2 ? -1 : 1) * bridge_sign(n, j, k) < 0) polys[r] = -polys[r];
    }
    return polys;
}

NonnegReport is_totally_nonnegative(const SkewMatrix& a) {
    const int n = a.n();
    const auto polys = perturbed_numerators(a);
    if (polys.back().coeff(0) != 1) fail(Errc::internal, "left block minor of the perturbed point lacks constant term 1");
    NonnegReport rep;
    bool all_positive = true;
    const auto idx = minor_indices(n);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        LeadingTerm lt{idx[r].first, idx[r].second, lowest_term(polys[r])};
        if (!lt.term || lt.term->degree > 0 || lt.term->coeff <= 0) all_positive = false;
        if (!rep.witness && (!lt.term || lt.term->coeff < 0)) rep.witness = idx[r];
        rep.leading.push_back(std::move(lt));
    }
    if (rep.witness)
        rep.verdict = Verdict::not_nonnegative;
    else
        rep.verdict = all_positive ? Verdict::positive : Verdict::nonnegative_boundary;
    return rep;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::positive: return "positive";
        case Verdict::nonnegative_boundary: return "nonnegative-boundary";
        case Verdict::not_nonnegative: return "not-nonnegative";
    }
    return "unknown";
}

}  // namespace ogr
