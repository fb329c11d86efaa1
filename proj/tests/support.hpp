#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "exact.hpp"

namespace testing_support {

using ogr::QMatrix;
using ogr::Rational;
using ogr::SkewMatrix;

inline Rational rand_rational(std::mt19937_64& rng, int lo = -9, int hi = 9, int den = 5) {
    std::uniform_int_distribution<int> num(lo, hi), d(1, den);
    Rational q(num(rng), d(rng));
    q.canonicalize();
    return q;
}

inline Rational rand_positive(std::mt19937_64& rng, int hi = 9) {
    std::uniform_int_distribution<int> u(1, hi);
    Rational q(u(rng), u(rng));
    q.canonicalize();
    return q;
}

inline std::vector<Rational> rand_params(std::mt19937_64& rng, std::size_t count, int hi = 9) {
    std::vector<Rational> t;
    for (std::size_t i = 0; i < count; ++i) t.push_back(rand_positive(rng, hi));
    return t;
}

inline SkewMatrix rand_skew(std::mt19937_64& rng, int n) {
    QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            m.at1(i, j) = rand_rational(rng);
            m.at1(j, i) = -m.at1(i, j);
        }
    return SkewMatrix(std::move(m));
}

inline int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// Leibniz expansion.
inline Rational leibniz_det(const QMatrix& m) {
    std::vector<int> p(m.rows());
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        Rational term = perm_sign(p);
        for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, static_cast<std::size_t>(p[i]));
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Sum over perfect matchings written as permutations with p[2i] < p[2i+1] and increasing first entries.
inline Rational matching_pfaffian(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n % 2) return 0;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        bool canonical = true;
        for (std::size_t i = 0; i < n; i += 2) {
            if (p[i] > p[i + 1]) canonical = false;
            if (i >= 2 && p[i - 2] > p[i]) canonical = false;
        }
        if (!canonical) continue;
        Rational term = perm_sign(p);
        for (std::size_t i = 0; i < n; i += 2)
            term *= m(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[i + 1]));
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline Rational product(const std::vector<Rational>& t, std::initializer_list<std::pair<int, int>> powers) {
    Rational r = 1;
    for (const auto& [i, e] : powers)
        for (int k = 0; k < e; ++k) r *= t[static_cast<std::size_t>(i - 1)];
    return r;
}

}  // namespace testing_support
