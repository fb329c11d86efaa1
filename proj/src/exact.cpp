#include "exact.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace ogr {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        fail(Errc::argument, "malformed rational '" + std::string(text) + "'");
    std::string canon(s.front() == '+' ? s.substr(1) : s);
    Rational q;
    if (slash != std::string_view::npos) {
        Integer d{std::string(den)};
        if (d == 0) fail(Errc::argument, "zero denominator in '" + std::string(text) + "'");
    }
    q.set_str(canon, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

int sign(const Rational& q) { return sgn(q); }

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::monomial(int degree, const Rational& c) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(d)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

std::string to_string(const Poly& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ", ";
        out += to_string(p.coeffs()[i]);
    }
    return out + "]";
}

Poly parse_poly(std::string_view text) {
    std::string s(text);
    const auto lb = s.find('['), rb = s.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        fail(Errc::argument, "malformed polynomial '" + s + "'");
    std::vector<Rational> coeffs;
    std::stringstream ss(s.substr(lb + 1, rb - lb - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        coeffs.push_back(parse_rational(item));
    }
    return Poly::from_coeffs(std::move(coeffs));
}

std::optional<Term> lowest_term(const Poly& p) {
    for (std::size_t d = 0; d < p.coeffs().size(); ++d)
        if (p.coeffs()[d] != 0) return Term{static_cast<int>(d), p.coeffs()[d]};
    return std::nullopt;
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) fail(Errc::dimension, "interpolate: point count mismatch");
    const std::size_t m = xs.size();
    // Newton divided differences, then expansion into the monomial basis.
    std::vector<Rational> dd(ys);
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    Poly result;
    for (std::size_t k = m; k-- > 0;) {
        result = result * Poly::from_coeffs({-xs[k], Rational(1)}) + Poly(dd[k]);
    }
    return result;
}

namespace {

Integer lcm_of_denominators(const QMatrix& m, std::size_t row) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Integer& d = m(row, j).get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

}  // namespace

Rational det(const QMatrix& m) {
    if (!m.square()) fail(Errc::dimension, "det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Clear denominators row by row, then fraction-free elimination over the integers.
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Integer l = lcm_of_denominators(m, i);
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = m(i, j);
            a[i * n + j] = q.get_num() * (l / q.get_den());
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
    int s = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Rational d(at(n - 1, n - 1) * s, scale);
    d.canonicalize();
    return d;
}

namespace {

void check_index_list(const std::vector<int>& idx, std::size_t bound, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1 || static_cast<std::size_t>(idx[i]) > bound)
            fail(Errc::argument, std::string("minor: ") + what + " index out of range");
        if (i && idx[i] <= idx[i - 1])
            fail(Errc::argument, std::string("minor: ") + what + " indices not strictly increasing");
    }
}

int max_degree(const PMatrix& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
    return d;
}

}  // namespace

Rational minor(const QMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) fail(Errc::dimension, "minor: row and column counts differ");
    check_index_list(rows, m.rows(), "row");
    check_index_list(cols, m.cols(), "column");
    return det(m.select(rows, cols));
}

QMatrix evaluate(const PMatrix& m, const Rational& x) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).eval(x);
    return q;
}

PMatrix to_poly(const QMatrix& m) {
    PMatrix p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Poly(m(i, j));
    return p;
}

std::vector<Poly> poly_minors(const PMatrix& m,
                              const std::vector<std::pair<std::vector<int>, std::vector<int>>>& sets) {
    std::size_t k = 0;
    for (const auto& [rows, cols] : sets) {
        if (rows.size() != cols.size()) fail(Errc::dimension, "minor: row and column counts differ");
        check_index_list(rows, m.rows(), "row");
        check_index_list(cols, m.cols(), "column");
        k = std::max(k, rows.size());
    }
    const int bound = static_cast<int>(k) * max_degree(m);
    std::vector<Rational> xs;
    for (int i = 0; i <= bound; ++i) xs.emplace_back(i);
    std::vector<std::vector<Rational>> ys(sets.size());
    for (const Rational& x : xs) {
        const QMatrix q = evaluate(m, x);
        for (std::size_t s = 0; s < sets.size(); ++s) ys[s].push_back(det(q.select(sets[s].first, sets[s].second)));
    }
    std::vector<Poly> out;
    out.reserve(sets.size());
    for (auto& y : ys) out.push_back(interpolate(xs, y));
    return out;
}

Poly det(const PMatrix& m) {
    if (!m.square()) fail(Errc::dimension, "det: matrix is not square");
    std::vector<int> all;
    for (std::size_t i = 1; i <= m.rows(); ++i) all.push_back(static_cast<int>(i));
    if (all.empty()) return Poly(1);
    return poly_minors(m, {{all, all}}).front();
}

bool is_skew(const QMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

Rational pfaffian(const QMatrix& m) {
    if (!m.square()) fail(Errc::dimension, "pfaffian: matrix is not square");
    if (!is_skew(m)) fail(Errc::not_skew, "pfaffian: matrix is not skew-symmetric");
    if (m.rows() % 2) fail(Errc::dimension, "pfaffian: odd dimension");
    if (m.rows() > 64) fail(Errc::limit, "pfaffian: dimension above 64");
    std::unordered_map<std::uint64_t, Rational> memo;
    std::function<Rational(std::uint64_t)> pf = [&](std::uint64_t set) -> Rational {
        if (set == 0) return 1;
        if (auto it = memo.find(set); it != memo.end()) return it->second;
        const int first = __builtin_ctzll(set);
        const std::uint64_t rest = set & ~(std::uint64_t{1} << first);
        Rational acc = 0;
        int pos = 1;
        for (std::uint64_t r = rest; r; r &= r - 1) {
            ++pos;
            const int j = __builtin_ctzll(r);
            const Rational& a = m(static_cast<std::size_t>(first), static_cast<std::size_t>(j));
            if (a == 0) continue;
            const Rational sub = pf(rest & ~(std::uint64_t{1} << j));
            if (pos % 2 == 0)
                acc += a * sub;
            else
                acc -= a * sub;
        }
        memo.emplace(set, acc);
        return acc;
    };
    const std::uint64_t full = m.rows() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m.rows()) - 1);
    return pf(full);
}

SkewMatrix::SkewMatrix(QMatrix a) : a_(std::move(a)) {
    if (!a_.square()) fail(Errc::dimension, "skew matrix must be square");
    if (!is_skew(a_)) fail(Errc::not_skew, "matrix is not skew-symmetric");
}

std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace ogr
