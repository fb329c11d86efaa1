#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "so2n.hpp"
#include "weyl.hpp"

namespace ogr {

// Ground set [2n] ordered 1 < ... < n < 2n < 2n-1 < ... < n+1.
std::vector<int> prec_order(int n);

struct BasisSet {
    int rank = 0;
    std::vector<int> order;                  // ground set, ascending in the chosen total order
    std::set<std::vector<int>> bases;        // each basis sorted numerically

    bool contains(const std::vector<int>& subset) const;
    std::vector<int> sorted(std::vector<int> subset) const;  // ascending in the total order
};

BasisSet matroid_of(const ChartPoint& p, bool allow_large = false);
// The Gale-maximal basis, sorted in the total order; fails if no unique maximum exists.
std::vector<int> gale_max(const BasisSet& b);

struct Lowering {
    std::vector<std::vector<int>> sets;  // I^(0..rank), each sorted in the total order
    std::vector<int> replacements;       // the element chosen at step j
};
Lowering lowerings(const BasisSet& b, const std::vector<int>& basis);

struct CellLabel {
    SignedPerm v, w;
    friend bool operator==(const CellLabel& a, const CellLabel& b) { return a.v == b.v && a.w == b.w; }
    friend bool operator<(const CellLabel& a, const CellLabel& b) {
        return a.v < b.v || (a.v == b.v && a.w < b.w);
    }
};

CellLabel make_label(const SignedPerm& v, const SignedPerm& w);
int cell_dimension(const CellLabel& c);

// Text form "a;b" where a is the window of v^-1 and b the window of w^-1:
// the lowering replacements and the sorted Gale maximum of any point in the cell.
std::string label_string(const CellLabel& c);
CellLabel parse_label(std::string_view text);

CellLabel identify_cell(const ChartPoint& p, bool allow_large = false);
ChartPoint sample_cell(const CellLabel& c, const std::vector<Rational>& t);
std::vector<CellLabel> cells_in_chart(int n, bool allow_large = false);

}  // namespace ogr
