#include "pfaffians.hpp"

#include <algorithm>
#include <cstdint>

namespace ogr {

namespace {

void check_subset(const std::vector<int>& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] < 1 || s[i] > n || (i && s[i] <= s[i - 1]))
            fail(Errc::argument, "subset must be strictly increasing in [n]");
}

}  // namespace

Rational pf_sub(const SkewMatrix& a, const std::vector<int>& subset) {
    check_subset(subset, a.n());
    if (subset.size() % 2) return 0;
    if (subset.empty()) return 1;
    return pfaffian(a.matrix().select(subset, subset));
}

int subset_sign(const std::vector<int>& subset, int n) {
    check_subset(subset, n);
    if (subset.size() % 2) fail(Errc::argument, "sign pattern needs an even subset");
    long sum = 0;
    for (int i : subset) sum += i;
    const long m = static_cast<long>(subset.size());
    return (sum - m * (m + 1) / 2) % 2 ? -1 : 1;
}

int shuffle_sign(const std::vector<int>& subset, int n) {
    check_subset(subset, n);
    std::vector<int> word(subset);
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(subset.begin(), subset.end(), i)) word.push_back(i);
    int inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

std::vector<PfaffianEntry> pfaffian_vector(const SkewMatrix& a) {
    const int n = a.n();
    if (n > 24) fail(Errc::limit, "Pfaffian vector supports n <= 24");
    // Pf over every subset mask, by the first-row expansion, smaller sets first.
    const std::uint32_t full = 1u << n;
    std::vector<Rational> pf(full, Rational(0));
    pf[0] = 1;
    std::vector<std::uint32_t> order;
    for (std::uint32_t m = 1; m < full; ++m)
        if (__builtin_popcount(m) % 2 == 0) order.push_back(m);
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint32_t x, std::uint32_t y) { return __builtin_popcount(x) < __builtin_popcount(y); });
    for (std::uint32_t m : order) {
        const int first = __builtin_ctz(m);
        const std::uint32_t rest = m & ~(1u << first);
        Rational acc = 0;
        int pos = 1;
        for (std::uint32_t r = rest; r; r &= r - 1) {
            ++pos;
            const int j = __builtin_ctz(r);
            const Rational& e = a(first + 1, j + 1);
            if (e == 0) continue;
            if (pos % 2 == 0)
                acc += e * pf[rest & ~(1u << j)];
            else
                acc -= e * pf[rest & ~(1u << j)];
        }
        pf[m] = acc;
    }
    std::vector<PfaffianEntry> out;
    for (int size = 0; size <= n; size += 2)
        for (const auto& s : subsets(n, size)) {
            std::uint32_t m = 0;
            for (int i : s) m |= 1u << (i - 1);
            PfaffianEntry e;
            e.subset = s;
            e.pf = pf[m];
            e.sign = subset_sign(s, n);
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(size / 2));
            e.spinor = e.sign * Rational(scale) * e.pf;
            out.push_back(std::move(e));
        }
    return out;
}

std::vector<PfaffianEntry> spinor_coords(const SkewMatrix& a) { return pfaffian_vector(a); }

SignPatternResult check_sign_pattern(const SkewMatrix& a, bool strict) {
    SignPatternResult r;
    for (const auto& e : pfaffian_vector(a)) {
        const int s = e.sign * sign(e.pf);
        if (s < 0 || (strict && s == 0)) {
            r.ok = false;
            r.witness = e.subset;
            break;
        }
    }
    return r;
}

SkewMatrix diag_conjugate(const SkewMatrix& a) {
    QMatrix m = a.matrix();
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            if ((i + j) % 2) m.at1(i, j) = -m.at1(i, j);
    return SkewMatrix(std::move(m));
}

}  // namespace ogr
