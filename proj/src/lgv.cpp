#include "lgv.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace ogr {

namespace {

struct LabelEntry {
    int from, to, sign;
};

// Off-diagonal entries of x_i(t) / t, as label pairs.
std::vector<LabelEntry> arrow_entries(int n, int i) {
    if (i < n) return {{i, i + 1, 1}, {n + i + 1, n + i, -1}};
    return {{n - 1, 2 * n, 1}, {n, 2 * n - 1, -1}};
}

// The signed permutation carried by the transposed lift of s_i.
std::vector<LabelEntry> perm_entries(int n, int i) {
    if (i < n) return {{i, i + 1, 1}, {i + 1, i, -1}, {n + i, n + i + 1, 1}, {n + i + 1, n + i, -1}};
    return {{n - 1, 2 * n, 1}, {2 * n, n - 1, -1}, {n, 2 * n - 1, -1}, {2 * n - 1, n, 1}};
}

struct Layer {
    int letter;
    bool perm;
    int param;
    int slot;
};

Diagram build_from_layers(int n, const std::vector<Layer>& layers, int params) {
    Diagram d;
    d.n = n;
    d.params = params;
    std::vector<int> lambda(static_cast<std::size_t>(2 * n));
    for (int p = 1; p <= 2 * n; ++p) lambda[static_cast<std::size_t>(p - 1)] = position_label(n, p);
    std::vector<Step> rev;
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        std::vector<int> pos_of(static_cast<std::size_t>(2 * n) + 1);
        for (int p = 1; p <= 2 * n; ++p) pos_of[static_cast<std::size_t>(lambda[static_cast<std::size_t>(p - 1)])] = p;
        if (it->perm) {
            const auto entries = perm_entries(n, it->letter);
            std::vector<Step> marks;
            for (int p = 1; p <= 2 * n; ++p) {
                const int right = lambda[static_cast<std::size_t>(p - 1)];
                for (const auto& e : entries)
                    if (e.to == right) {
                        lambda[static_cast<std::size_t>(p - 1)] = e.from;
                        if (e.sign < 0) marks.push_back({true, p, p, 0, -1, it->slot});
                    }
            }
            rev.insert(rev.end(), marks.rbegin(), marks.rend());
        } else {
            const auto entries = arrow_entries(n, it->letter);
            for (auto e = entries.rbegin(); e != entries.rend(); ++e)
                rev.push_back({false, pos_of[static_cast<std::size_t>(e->from)], pos_of[static_cast<std::size_t>(e->to)],
                               it->param, e->sign, it->slot});
        }
    }
    d.sources = lambda;
    d.steps.assign(rev.rbegin(), rev.rend());
    return d;
}

void check_cap(int n, bool allow_large) {
    if (n > 8) fail(Errc::limit, "path enumeration supports at most 16 strands");
    if (n > 6 && !allow_large) fail(Errc::limit, "path enumeration refused for n > 6 without override");
}

int permutation_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

std::vector<int> checked_sinks(const Diagram& d, const std::vector<int>& sinks) {
    std::vector<int> s(sinks);
    std::sort(s.begin(), s.end());
    if (s.size() != static_cast<std::size_t>(d.n)) fail(Errc::dimension, "sink set must have n elements");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] < 1 || s[i] > 2 * d.n || (i && s[i] == s[i - 1])) fail(Errc::argument, "sink labels must be distinct in [2n]");
    return s;
}

std::uint32_t start_mask(const Diagram& d) {
    std::uint32_t m = 0;
    for (int p = 1; p <= 2 * d.n; ++p)
        if (d.sources[static_cast<std::size_t>(p - 1)] <= d.n) m |= 1u << (p - 1);
    return m;
}

std::uint32_t sink_mask(int n, const std::vector<int>& sinks) {
    std::uint32_t m = 0;
    for (int s : sinks) m |= 1u << (label_position(n, s) - 1);
    return m;
}

// reach[k][mask]: from occupancy `mask` just before step k the target is reachable.
std::vector<std::vector<char>> backward_reach(const Diagram& d, std::uint32_t target) {
    const std::size_t states = std::size_t{1} << (2 * d.n);
    std::vector<std::vector<char>> reach(d.steps.size() + 1, std::vector<char>(states, 0));
    reach.back()[target] = 1;
    for (std::size_t k = d.steps.size(); k-- > 0;) {
        const Step& s = d.steps[k];
        auto& cur = reach[k];
        const auto& nxt = reach[k + 1];
        if (s.mark) {
            cur = nxt;
            continue;
        }
        const std::uint32_t tb = 1u << (s.tail - 1), hb = 1u << (s.head - 1);
        for (std::uint32_t m = 0; m < states; ++m)
            cur[m] = nxt[m] || ((m & tb) && !(m & hb) && nxt[(m & ~tb) | hb]);
    }
    return reach;
}

using StateMap = std::unordered_map<std::uint64_t, Rational>;

int occupant(std::uint64_t code, int p) { return static_cast<int>((code >> (4 * (p - 1))) & 0xF); }

// Sum of signed path weights, grouped by final occupancy code.
StateMap run_dp(const Diagram& d, const std::vector<Rational>& t, const std::vector<std::vector<char>>* reach) {
    std::uint64_t init = 0;
    for (int p = 1; p <= 2 * d.n; ++p) {
        const int r = d.sources[static_cast<std::size_t>(p - 1)];
        if (r <= d.n) init |= static_cast<std::uint64_t>(r) << (4 * (p - 1));
    }
    auto mask_of = [&](std::uint64_t code) {
        std::uint32_t m = 0;
        for (int p = 1; p <= 2 * d.n; ++p)
            if (occupant(code, p)) m |= 1u << (p - 1);
        return m;
    };
    StateMap cur;
    if (!reach || (*reach)[0][mask_of(init)]) cur.emplace(init, Rational(1));
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        const Step& s = d.steps[k];
        if (s.mark) {
            for (auto& [code, w] : cur)
                if (occupant(code, s.tail)) w = -w;
            continue;
        }
        const Rational weight = s.sign * t[static_cast<std::size_t>(s.param - 1)];
        StateMap next;
        for (const auto& [code, w] : cur) {
            const std::uint32_t m = mask_of(code);
            if (!reach || (*reach)[k + 1][m]) next[code] += w;
            const int r = occupant(code, s.tail);
            if (r && !occupant(code, s.head)) {
                const std::uint64_t moved = (code & ~(std::uint64_t{0xF} << (4 * (s.tail - 1)))) |
                                            (static_cast<std::uint64_t>(r) << (4 * (s.head - 1)));
                if (!reach || (*reach)[k + 1][mask_of(moved)]) next[moved] += w * weight;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::pair<std::vector<int>, int> decode_final(int n, std::uint64_t code) {
    std::vector<int> by_row(static_cast<std::size_t>(n));
    std::vector<int> sinks;
    for (int p = 1; p <= 2 * n; ++p) {
        const int r = occupant(code, p);
        if (!r) continue;
        by_row[static_cast<std::size_t>(r - 1)] = position_label(n, p);
        sinks.push_back(position_label(n, p));
    }
    std::sort(sinks.begin(), sinks.end());
    return {sinks, permutation_sign(by_row)};
}

void check_params(const Diagram& d, const std::vector<Rational>& t) {
    if (t.size() != static_cast<std::size_t>(d.params)) fail(Errc::dimension, "parameter count does not match the diagram");
}

}  // namespace

int label_position(int n, int label) {
    if (label < 1 || label > 2 * n) fail(Errc::argument, "label out of range");
    return label <= n ? label : 3 * n + 1 - label;
}

int position_label(int n, int position) {
    if (position < 1 || position > 2 * n) fail(Errc::argument, "strand position out of range");
    return position <= n ? position : 3 * n + 1 - position;
}

std::size_t Diagram::arrow_count() const {
    return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const Step& s) { return !s.mark; }));
}

std::size_t Diagram::mark_count() const { return steps.size() - arrow_count(); }

std::vector<int> PathCollection::sinks() const {
    std::vector<int> s;
    for (const auto& p : paths) s.push_back(p.sink);
    std::sort(s.begin(), s.end());
    return s;
}

Diagram build_top(int n) {
    const Word word = w0_coset_word(n);
    std::vector<Layer> layers;
    for (std::size_t k = 0; k < word.size(); ++k)
        layers.push_back({word[k], false, static_cast<int>(k) + 1, static_cast<int>(k) + 1});
    return build_from_layers(n, layers, static_cast<int>(word.size()));
}

Diagram build_boundary(const SignedPerm& v, const SignedPerm& w) {
    const CellWord cw = cell_word(v, w);
    std::vector<Layer> layers;
    int param = 0;
    for (std::size_t k = 0; k < cw.letters.size(); ++k) {
        const bool perm = cw.vmask[k];
        layers.push_back({cw.letters[k], perm, perm ? 0 : ++param, cw.base_positions[k]});
    }
    return build_from_layers(cw.n, layers, param);
}

bool arrows_upward(const Diagram& d) {
    return std::all_of(d.steps.begin(), d.steps.end(), [](const Step& s) { return s.mark || s.head > s.tail; });
}

std::vector<PathCollection> enumerate_collections(const Diagram& d, const std::vector<int>& sinks, bool allow_large) {
    check_cap(d.n, allow_large);
    const std::vector<int> target = checked_sinks(d, sinks);
    const auto reach = backward_reach(d, sink_mask(d.n, target));
    std::vector<PathCollection> out;
    const std::uint32_t start = start_mask(d);
    if (!reach[0][start]) return out;
    // row[p-1]: source label currently on position p, 0 if free.
    std::vector<int> row(static_cast<std::size_t>(2 * d.n), 0);
    for (int p = 1; p <= 2 * d.n; ++p)
        if (d.sources[static_cast<std::size_t>(p - 1)] <= d.n) row[static_cast<std::size_t>(p - 1)] = d.sources[static_cast<std::size_t>(p - 1)];
    std::vector<std::vector<int>> used(static_cast<std::size_t>(d.n));
    std::function<void(std::size_t, std::uint32_t)> dfs = [&](std::size_t k, std::uint32_t mask) {
        while (k < d.steps.size() && d.steps[k].mark) ++k;
        if (k == d.steps.size()) {
            PathCollection c;
            for (int r = 1; r <= d.n; ++r) c.paths.push_back({r, 0, used[static_cast<std::size_t>(r - 1)]});
            for (int p = 1; p <= 2 * d.n; ++p)
                if (const int r = row[static_cast<std::size_t>(p - 1)]) c.paths[static_cast<std::size_t>(r - 1)].sink = position_label(d.n, p);
            out.push_back(std::move(c));
            return;
        }
        const Step& s = d.steps[k];
        const std::uint32_t tb = 1u << (s.tail - 1), hb = 1u << (s.head - 1);
        if ((mask & tb) && !(mask & hb) && reach[k + 1][(mask & ~tb) | hb]) {
            const int r = row[static_cast<std::size_t>(s.tail - 1)];
            row[static_cast<std::size_t>(s.tail - 1)] = 0;
            row[static_cast<std::size_t>(s.head - 1)] = r;
            used[static_cast<std::size_t>(r - 1)].push_back(static_cast<int>(k));
            dfs(k + 1, (mask & ~tb) | hb);
            used[static_cast<std::size_t>(r - 1)].pop_back();
            row[static_cast<std::size_t>(s.head - 1)] = 0;
            row[static_cast<std::size_t>(s.tail - 1)] = r;
        }
        if (reach[k + 1][mask]) dfs(k + 1, mask);
    };
    dfs(0, start);
    return out;
}

Rational collection_weight(const Diagram& d, const PathCollection& c, const std::vector<Rational>& t) {
    check_params(d, t);
    Rational w = 1;
    std::vector<int> by_row;
    for (const auto& path : c.paths) {
        by_row.push_back(path.sink);
        int pos = 0;
        for (int p = 1; p <= 2 * d.n; ++p)
            if (d.sources[static_cast<std::size_t>(p - 1)] == path.source) pos = p;
        std::size_t next = 0;
        for (std::size_t k = 0; k < d.steps.size(); ++k) {
            const Step& s = d.steps[k];
            if (s.mark) {
                if (s.tail == pos) w = -w;
            } else if (next < path.arrows.size() && static_cast<std::size_t>(path.arrows[next]) == k) {
                w *= s.sign * t[static_cast<std::size_t>(s.param - 1)];
                pos = s.head;
                ++next;
            }
        }
    }
    return w * permutation_sign(by_row);
}

Rational lgv_minor(const Diagram& d, const std::vector<int>& sinks, const std::vector<Rational>& t, bool allow_large) {
    check_cap(d.n, allow_large);
    check_params(d, t);
    const std::vector<int> target = checked_sinks(d, sinks);
    const auto reach = backward_reach(d, sink_mask(d.n, target));
    Rational total = 0;
    for (const auto& [code, w] : run_dp(d, t, &reach)) {
        const auto [s, sg] = decode_final(d.n, code);
        if (s == target) total += sg * w;
    }
    return total;
}

std::map<std::vector<int>, Rational> lgv_all_minors(const Diagram& d, const std::vector<Rational>& t, bool allow_large) {
    check_cap(d.n, allow_large);
    check_params(d, t);
    std::map<std::vector<int>, Rational> out;
    for (const auto& [code, w] : run_dp(d, t, nullptr)) {
        const auto [s, sg] = decode_final(d.n, code);
        out[s] += sg * w;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

PathCollection left_greedy(const Diagram& d) {
    if (!arrows_upward(d)) fail(Errc::domain, "left greedy paths need upward arrows");
    std::vector<int> row(static_cast<std::size_t>(2 * d.n), 0);
    for (int p = 1; p <= 2 * d.n; ++p)
        if (d.sources[static_cast<std::size_t>(p - 1)] <= d.n) row[static_cast<std::size_t>(p - 1)] = d.sources[static_cast<std::size_t>(p - 1)];
    PathCollection c;
    for (int r = 1; r <= d.n; ++r) c.paths.push_back({r, 0, {}});
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        const Step& s = d.steps[k];
        if (s.mark) continue;
        const int r = row[static_cast<std::size_t>(s.tail - 1)];
        if (!r) continue;
        if (row[static_cast<std::size_t>(s.head - 1)]) fail(Errc::internal, "left greedy paths collide");
        row[static_cast<std::size_t>(s.tail - 1)] = 0;
        row[static_cast<std::size_t>(s.head - 1)] = r;
        c.paths[static_cast<std::size_t>(r - 1)].arrows.push_back(static_cast<int>(k));
    }
    for (int p = 1; p <= 2 * d.n; ++p)
        if (const int r = row[static_cast<std::size_t>(p - 1)]) c.paths[static_cast<std::size_t>(r - 1)].sink = position_label(d.n, p);
    return c;
}

std::string export_dot(const Diagram& d) {
    const int strands = 2 * d.n;
    const int last = static_cast<int>(d.steps.size()) + 1;
    auto node = [](int p, int col) { return "p" + std::to_string(p) + "_" + std::to_string(col); };
    std::ostringstream out;
    out << "digraph lgv {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=point];\n";
    for (int p = 1; p <= strands; ++p) {
        out << "  " << node(p, 0) << " [shape=plaintext, label=\"" << d.sources[static_cast<std::size_t>(p - 1)] << "\"];\n";
        out << "  " << node(p, last) << " [shape=plaintext, label=\"" << position_label(d.n, p) << "\"];\n";
    }
    // Columns: one per step, holding the strand nodes that step touches.
    std::vector<std::vector<int>> touched(static_cast<std::size_t>(strands) + 1);
    for (int p = 1; p <= strands; ++p) touched[static_cast<std::size_t>(p)].push_back(0);
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        const Step& s = d.steps[k];
        const int col = static_cast<int>(k) + 1;
        touched[static_cast<std::size_t>(s.tail)].push_back(col);
        if (!s.mark) touched[static_cast<std::size_t>(s.head)].push_back(col);
        out << "  subgraph c" << col << " { rank=same; " << node(s.tail, col) << ";";
        if (!s.mark) out << " " << node(s.head, col) << ";";
        out << " }\n";
    }
    for (int p = 1; p <= strands; ++p) {
        auto& cols = touched[static_cast<std::size_t>(p)];
        cols.push_back(last);
        for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
            const int to = cols[i + 1];
            bool marked = to != last && d.steps[static_cast<std::size_t>(to - 1)].mark;
            out << "  " << node(p, cols[i]) << " -> " << node(p, to) << " [arrowhead=none";
            if (marked) out << ", label=\"-1\", sign=\"-1\"";
            out << "];\n";
        }
    }
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        const Step& s = d.steps[k];
        if (s.mark) continue;
        const int col = static_cast<int>(k) + 1;
        out << "  " << node(s.tail, col) << " -> " << node(s.head, col) << " [label=\"" << (s.sign < 0 ? "-" : "")
            << "t" << s.param << "\", constraint=false];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ogr
