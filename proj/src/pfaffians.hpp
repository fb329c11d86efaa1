#pragma once

#include <optional>
#include <vector>

#include "exact.hpp"

namespace ogr {

Rational pf_sub(const SkewMatrix& a, const std::vector<int>& subset);

// (-1)^(sum I - C(|I|+1, 2))
int subset_sign(const std::vector<int>& subset, int n);
// Sign of the permutation listing I, then [n] \ I, both increasing.
int shuffle_sign(const std::vector<int>& subset, int n);

struct PfaffianEntry {
    std::vector<int> subset;
    Rational pf;
    int sign = 1;      // subset_sign
    Rational spinor;   // sign * 2^(|I|/2) * pf, the coordinate at e_{[n] \ I}
};

// All even subsets, by size then lexicographically, starting with the empty set.
std::vector<PfaffianEntry> pfaffian_vector(const SkewMatrix& a);
std::vector<PfaffianEntry> spinor_coords(const SkewMatrix& a);

struct SignPatternResult {
    bool ok = true;
    std::optional<std::vector<int>> witness;
};

// strict: sign * Pf_I > 0 for all even I; otherwise >= 0.
SignPatternResult check_sign_pattern(const SkewMatrix& a, bool strict);

// g A g^T with g = diag(1, -1, 1, ...).
SkewMatrix diag_conjugate(const SkewMatrix& a);

}  // namespace ogr
