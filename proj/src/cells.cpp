#include "cells.hpp"

#include <algorithm>

namespace ogr {

namespace {

std::vector<int> rank_table(const std::vector<int>& order) {
    std::vector<int> rank(order.size() + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return rank;
}

SignedPerm from_sequence(int n, const std::vector<int>& seq) {
    try {
        return SignedPerm::from_window(n, seq);
    } catch (const Error&) {
        fail(Errc::not_recognized, "input not recognized as a point of the nonnegative locus");
    }
}

}  // namespace

std::vector<int> prec_order(int n) {
    std::vector<int> o;
    for (int i = 1; i <= n; ++i) o.push_back(i);
    for (int i = 2 * n; i >= n + 1; --i) o.push_back(i);
    return o;
}

bool BasisSet::contains(const std::vector<int>& subset) const {
    std::vector<int> s(subset);
    std::sort(s.begin(), s.end());
    return bases.count(s) > 0;
}

std::vector<int> BasisSet::sorted(std::vector<int> subset) const {
    const auto rank = rank_table(order);
    std::sort(subset.begin(), subset.end(),
              [&](int x, int y) { return rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)]; });
    return subset;
}

BasisSet matroid_of(const ChartPoint& p, bool allow_large) {
    const int n = p.n;
    if (n > 7 && !allow_large) fail(Errc::limit, "matroid computation refused for n > 7 without override");
    BasisSet b;
    b.rank = n;
    b.order = prec_order(n);
    std::vector<int> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(i);
    for (const auto& cols : subsets(2 * n, n))
        if (minor(p.X, rows, cols) != 0) b.bases.insert(cols);
    if (b.bases.empty()) fail(Errc::domain, "point has rank below n");
    return b;
}

std::vector<int> gale_max(const BasisSet& b) {
    if (b.bases.empty()) fail(Errc::domain, "empty basis set");
    const auto rank = rank_table(b.order);
    auto key = [&](const std::vector<int>& s) {
        std::vector<int> r;
        for (int x : s) r.push_back(rank[static_cast<std::size_t>(x)]);
        std::sort(r.begin(), r.end());
        return r;
    };
    std::vector<int> best_key;
    std::vector<int> best;
    for (const auto& s : b.bases) {
        auto k = key(s);
        std::vector<int> rk(k.rbegin(), k.rend()), rb(best_key.rbegin(), best_key.rend());
        if (best.empty() || rk > rb) {
            best_key = std::move(k);
            best = s;
        }
    }
    for (const auto& s : b.bases) {
        const auto k = key(s);
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] > best_key[i]) fail(Errc::internal, "basis set has no unique Gale-maximal element");
    }
    return b.sorted(best);
}

Lowering lowerings(const BasisSet& b, const std::vector<int>& basis) {
    if (!b.contains(basis)) fail(Errc::domain, "set is not a basis");
    Lowering out;
    std::vector<int> cur = b.sorted(basis);
    out.sets.push_back(cur);
    for (int j = 0; j < b.rank; ++j) {
        const int old = cur[static_cast<std::size_t>(j)];
        for (int t : b.order) {
            if (t != old && std::find(cur.begin(), cur.end(), t) != cur.end()) continue;
            std::vector<int> cand(cur);
            cand[static_cast<std::size_t>(j)] = t;
            if (b.contains(cand)) {
                cur = b.sorted(cand);
                out.replacements.push_back(t);
                break;
            }
        }
        out.sets.push_back(cur);
    }
    return out;
}

CellLabel make_label(const SignedPerm& v, const SignedPerm& w) {
    if (v.n() != w.n()) fail(Errc::dimension, "rank mismatch in cell label");
    if (!is_min_coset_rep(w)) fail(Errc::domain, "w is not a minimal coset representative");
    if (!bruhat_leq(v, w)) fail(Errc::domain, "v is not below w in Bruhat order");
    return {v, w};
}

int cell_dimension(const CellLabel& c) { return length(c.w) - length(c.v); }

std::string label_string(const CellLabel& c) {
    return window_string(c.v.inverse()) + ";" + window_string(c.w.inverse());
}

CellLabel parse_label(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) fail(Errc::argument, "cell label must look like 'v;w'");
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    const SignedPerm vi = parse_window(trim(text.substr(0, semi)));
    const SignedPerm wi = parse_window(trim(text.substr(semi + 1)));
    if (vi.n() != wi.n()) fail(Errc::argument, "cell label windows differ in length");
    return make_label(vi.inverse(), wi.inverse());
}

CellLabel identify_cell(const ChartPoint& p, bool allow_large) {
    const int n = p.n;
    const BasisSet b = matroid_of(p, allow_large);
    const std::vector<int> top = gale_max(b);
    const Lowering low = lowerings(b, top);
    const SignedPerm w = from_sequence(n, top).inverse();
    const SignedPerm v = from_sequence(n, low.replacements).inverse();
    if (!is_min_coset_rep(w) || !bruhat_leq(v, w))
        fail(Errc::not_recognized, "input not recognized as a point of the nonnegative locus");
    return {v, w};
}

ChartPoint sample_cell(const CellLabel& c, const std::vector<Rational>& t) {
    for (const auto& x : t)
        if (x <= 0) fail(Errc::domain, "cell parameters must be positive");
    return deodhar_point(c.v, c.w, t);
}

std::vector<CellLabel> cells_in_chart(int n, bool allow_large) {
    if (n < 2) fail(Errc::argument, "rank must be at least 2");
    if (n > 6 && !allow_large) fail(Errc::limit, "cell census refused for n > 6 without override");
    std::vector<CellLabel> out;
    const auto vs = parabolic_elements(n);
    for (const auto& w : min_coset_reps(n))
        for (const auto& v : vs)
            if (bruhat_leq(v, w)) out.push_back({v, w});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ogr
