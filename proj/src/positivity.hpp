#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace ogr {

// Index pairs 1 <= j <= k <= n-1 in reverse lexicographic order (k first, then j).
std::vector<std::pair<int, int>> minor_indices(int n);
// Position of t attached to (j, k): N - (C(k,2) + j - 1).
int param_index(int n, int j, int k);

std::vector<int> m_rows(int n, int j, int k);
std::vector<int> m_cols(int n, int j);
// Columns of the maximal minor of X that corresponds to M_{j,k}.
std::vector<int> plucker_columns(int n, int j, int k);
// Sign relating that maximal minor of [Id | A] to the plain minor of A.
int bridge_sign(int n, int j, int k);

Rational m_minor(const SkewMatrix& a, int j, int k);

struct MinorEntry {
    int j = 0, k = 0;
    Rational value;
};

struct MinorTable {
    int n = 0;
    std::vector<MinorEntry> entries;  // in minor_indices order
    const Rational& at(int j, int k) const;
};

MinorTable minor_table(const SkewMatrix& a);

struct PositivityResult {
    bool positive = false;
    MinorTable table;
};

PositivityResult is_totally_positive(const SkewMatrix& a);

// Exponent of t_i in the monomial M_{j,k}; rows follow minor_indices, columns t_1..t_N.
const std::vector<std::vector<long>>& exponent_matrix(int n);
const std::vector<std::vector<long>>& inverse_exponent_matrix(int n);

std::vector<Rational> recover_params(const SkewMatrix& a);
std::vector<Rational> params_from_table(const MinorTable& table);
SkewMatrix reconstruct(int n, const MinorTable& table);

enum class Verdict { positive, nonnegative_boundary, not_nonnegative };

struct LeadingTerm {
    int j = 0, k = 0;
    std::optional<Term> term;  // empty when the numerator vanishes identically
};

struct NonnegReport {
    Verdict verdict = Verdict::not_nonnegative;
    std::vector<LeadingTerm> leading;  // in minor_indices order
    std::optional<std::pair<int, int>> witness;
};

// Numerator polynomials N_{j,k}(eps) of M_{j,k} on the perturbed point [Id | A] Z(eps),
// followed by the left block minor as the last entry.
std::vector<Poly> perturbed_numerators(const SkewMatrix& a);
NonnegReport is_totally_nonnegative(const SkewMatrix& a);

const char* verdict_name(Verdict v);

}  // namespace ogr
