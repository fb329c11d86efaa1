#pragma once

#include <map>
#include <string>
#include <vector>

#include "exact.hpp"
#include "weyl.hpp"

namespace ogr {

// Strand positions run 1..2n bottom to top. With no relabeling, position p carries
// label p for p <= n and label 3n+1-p above, so the order is 1..n, 2n..n+1.
int label_position(int n, int label);
int position_label(int n, int position);

struct Step {
    bool mark = false;  // true: a -1 on the strand `tail` at this point
    int tail = 0;
    int head = 0;
    int param = 0;      // 1-based parameter index (arrows only)
    int sign = 1;       // weight is sign * t_param
    int slot = 0;       // letter position in the defining word
};

struct Diagram {
    int n = 0;
    int params = 0;
    std::vector<int> sources;  // sources[p-1] = label entering at the left of position p
    std::vector<Step> steps;   // left to right

    std::size_t arrow_count() const;
    std::size_t mark_count() const;
};

struct Path {
    int source = 0;            // row label in [n]
    int sink = 0;              // column label
    std::vector<int> arrows;   // indices into Diagram::steps, increasing
};

struct PathCollection {
    std::vector<Path> paths;   // ordered by source label
    std::vector<int> sinks() const;  // sorted
};

Diagram build_top(int n);
Diagram build_boundary(const SignedPerm& v, const SignedPerm& w);
bool arrows_upward(const Diagram& d);

std::vector<PathCollection> enumerate_collections(const Diagram& d, const std::vector<int>& sinks,
                                                  bool allow_large = false);
Rational collection_weight(const Diagram& d, const PathCollection& c, const std::vector<Rational>& t);
Rational lgv_minor(const Diagram& d, const std::vector<int>& sinks, const std::vector<Rational>& t,
                   bool allow_large = false);
// Every maximal minor at once, keyed by sorted sink labels; zero minors omitted.
std::map<std::vector<int>, Rational> lgv_all_minors(const Diagram& d, const std::vector<Rational>& t,
                                                    bool allow_large = false);

PathCollection left_greedy(const Diagram& d);

std::string export_dot(const Diagram& d);

}  // namespace ogr
