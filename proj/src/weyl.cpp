#include "weyl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "error.hpp"

namespace ogr {

namespace {

int wrap(int value, int n) { return (value - 1) % (2 * n) + 1; }

void validate(int n, const std::vector<int>& img) {
    if (n < 1) fail(Errc::argument, "rank must be positive");
    if (img.size() != static_cast<std::size_t>(2 * n)) fail(Errc::dimension, "signed permutation needs 2n images");
    std::vector<bool> seen(static_cast<std::size_t>(2 * n) + 1, false);
    for (int v : img) {
        if (v < 1 || v > 2 * n || seen[static_cast<std::size_t>(v)])
            fail(Errc::domain, "not a permutation of [2n]");
        seen[static_cast<std::size_t>(v)] = true;
    }
    int high = 0;
    for (int i = 1; i <= n; ++i) {
        const int wi = img[static_cast<std::size_t>(i - 1)];
        if (img[static_cast<std::size_t>(n + i - 1)] != wrap(wi + n, n))
            fail(Errc::domain, "congruence w(n+i) = n + w(i) mod 2n fails");
        if (wi > n) ++high;
    }
    if (high % 2) fail(Errc::domain, "odd number of sign changes");
}

struct CosetLetter {
    int letter;
    int sn_block;  // block index of an s_n occurrence, -1 otherwise
    int run;       // 1-based parenthesized run index, 0 for s_n
};

std::vector<CosetLetter> coset_layout(int n) {
    if (n < 2) fail(Errc::argument, "rank must be at least 2");
    std::vector<CosetLetter> out;
    for (int r = 0; r < n / 2; ++r) {
        out.push_back({n, r, 0});
        for (int i = n - 2; i >= 2 * r + 1; --i) out.push_back({i, -1, 2 * r + 1});
        for (int i = n - 1; i >= 2 * r + 2; --i) out.push_back({i, -1, 2 * r + 2});
    }
    return out;
}

}  // namespace

SignedPerm SignedPerm::identity(int n) {
    SignedPerm p;
    p.n_ = n;
    p.img_.resize(static_cast<std::size_t>(2 * n));
    std::iota(p.img_.begin(), p.img_.end(), 1);
    return p;
}

SignedPerm SignedPerm::from_images(int n, std::vector<int> images) {
    validate(n, images);
    SignedPerm p;
    p.n_ = n;
    p.img_ = std::move(images);
    return p;
}

SignedPerm SignedPerm::from_window(int n, const std::vector<int>& window) {
    if (window.size() != static_cast<std::size_t>(n)) fail(Errc::dimension, "window must have n entries");
    std::vector<int> img(window);
    for (int i = 0; i < n; ++i) {
        if (window[static_cast<std::size_t>(i)] < 1 || window[static_cast<std::size_t>(i)] > 2 * n)
            fail(Errc::domain, "window value out of range");
        img.push_back(wrap(window[static_cast<std::size_t>(i)] + n, n));
    }
    return from_images(n, std::move(img));
}

bool SignedPerm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm p;
    p.n_ = n_;
    p.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
    return p;
}

SignedPerm operator*(const SignedPerm& u, const SignedPerm& v) {
    if (u.n_ != v.n_) fail(Errc::dimension, "rank mismatch in product");
    SignedPerm p;
    p.n_ = u.n_;
    p.img_.resize(v.img_.size());
    for (std::size_t i = 0; i < v.img_.size(); ++i) p.img_[i] = u(v.img_[i]);
    return p;
}

SignedPerm generator(int n, int i) {
    if (n < 2) fail(Errc::argument, "rank must be at least 2");
    if (i < 1 || i > n) fail(Errc::argument, "generator index out of range");
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    std::iota(img.begin(), img.end(), 1);
    auto swap = [&](int a, int b) { std::swap(img[static_cast<std::size_t>(a - 1)], img[static_cast<std::size_t>(b - 1)]); };
    if (i < n) {
        swap(i, i + 1);
        swap(n + i, n + i + 1);
    } else {
        swap(n, 2 * n - 1);
        swap(n - 1, 2 * n);
    }
    return SignedPerm::from_images(n, std::move(img));
}

int length(const SignedPerm& w) {
    const int n = w.n();
    // Reverse the window so the special generator acts on the first two places,
    // then use the usual type D count on signed values.
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int x = w(n + 1 - i);
        const int s = x <= n ? x : -(x - n);
        r[static_cast<std::size_t>(i - 1)] = s > 0 ? n + 1 - s : -(n + 1 + s);
    }
    int len = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (r[static_cast<std::size_t>(i)] > r[static_cast<std::size_t>(j)]) ++len;
            if (r[static_cast<std::size_t>(i)] + r[static_cast<std::size_t>(j)] < 0) ++len;
        }
    return len;
}

Word reduced_word(const SignedPerm& w) {
    Word word;
    SignedPerm cur = w;
    int len = length(cur);
    while (len > 0) {
        for (int i = 1; i <= w.n(); ++i) {
            SignedPerm next = generator(w.n(), i) * cur;
            const int l = length(next);
            if (l < len) {
                word.push_back(i);
                cur = std::move(next);
                len = l;
                break;
            }
        }
    }
    return word;
}

bool bruhat_leq(const SignedPerm& u0, const SignedPerm& v0) {
    if (u0.n() != v0.n()) fail(Errc::dimension, "rank mismatch in Bruhat comparison");
    SignedPerm u = u0, v = v0;
    int lu = length(u), lv = length(v);
    while (true) {
        if (lu > lv) return false;
        if (lv == 0) return lu == 0;
        for (int i = 1; i <= v.n(); ++i) {
            const SignedPerm s = generator(v.n(), i);
            SignedPerm sv = s * v;
            if (length(sv) >= lv) continue;
            SignedPerm su = s * u;
            const int lsu = length(su);
            if (lsu < lu) {
                u = std::move(su);
                lu = lsu;
            }
            v = std::move(sv);
            --lv;
            break;
        }
    }
}

SignedPerm product(int n, const Word& word) {
    SignedPerm p = SignedPerm::identity(n);
    for (int letter : word) p = p * generator(n, letter);
    return p;
}

Word selected_letters(const Subexpression& s) {
    if (s.base.size() != s.mask.size()) fail(Errc::dimension, "mask length differs from word length");
    Word out;
    for (std::size_t i = 0; i < s.base.size(); ++i)
        if (s.mask[i]) out.push_back(s.base[i]);
    return out;
}

SignedPerm product(int n, const Subexpression& s) { return product(n, selected_letters(s)); }

Word w0_coset_word(int n) {
    Word w;
    for (const auto& c : coset_layout(n)) w.push_back(c.letter);
    return w;
}

Word w0_word(int n) {
    if (n < 2) fail(Errc::argument, "rank must be at least 2");
    Word w;
    for (int top = 1; top <= n - 1; ++top)
        for (int i = top; i >= 1; --i) w.push_back(i);
    const Word coset = w0_coset_word(n);
    w.insert(w.end(), coset.begin(), coset.end());
    return w;
}

std::vector<int> subset_of(const SignedPerm& w) {
    std::vector<int> out;
    for (int i = 1; i <= w.n(); ++i)
        if (w(i) > w.n()) out.push_back(i);
    return out;
}

Subexpression coset_word_from_subset(int n, const std::vector<int>& subset) {
    std::vector<int> s(subset);
    std::sort(s.begin(), s.end());
    if (s.size() % 2) fail(Errc::domain, "subset must have even size");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] < 1 || s[i] > n || (i && s[i] == s[i - 1])) fail(Errc::argument, "subset entries must be distinct in [n]");
    const auto layout = coset_layout(n);
    Subexpression out;
    const int half = static_cast<int>(s.size()) / 2;
    for (const auto& c : layout) {
        out.base.push_back(c.letter);
        bool keep = false;
        if (c.run == 0)
            keep = c.sn_block < half;
        else if (c.run <= static_cast<int>(s.size()))
            keep = c.letter >= s[static_cast<std::size_t>(c.run - 1)];
        out.mask.push_back(keep);
    }
    return out;
}

SignedPerm min_coset_rep(const SignedPerm& w) {
    return product(w.n(), coset_word_from_subset(w.n(), subset_of(w)));
}

bool is_min_coset_rep(const SignedPerm& w) { return min_coset_rep(w) == w; }

Subexpression distinguished_subexpr(const SignedPerm& v, int n, const Word& base) {
    const SignedPerm top = product(n, base);
    if (length(top) != static_cast<int>(base.size())) fail(Errc::domain, "base word is not reduced");
    if (!bruhat_leq(v, top)) fail(Errc::domain, "element is not below the base word product");
    const int target = length(v);
    const int p = static_cast<int>(base.size());
    std::vector<bool> mask(static_cast<std::size_t>(p), false);
    std::function<bool(int, const SignedPerm&, int)> search = [&](int pos, const SignedPerm& u, int lu) -> bool {
        if (pos == 0) return u == v;
        if (target - lu > pos) return false;
        const SignedPerm su = generator(n, base[static_cast<std::size_t>(pos - 1)]) * u;
        const int lsu = length(su);
        if (lsu < lu) return false;
        if (lsu <= target && length(v * su.inverse()) == target - lsu) {
            mask[static_cast<std::size_t>(pos - 1)] = true;
            if (search(pos - 1, su, lsu)) return true;
            mask[static_cast<std::size_t>(pos - 1)] = false;
        }
        return search(pos - 1, u, lu);
    };
    if (!search(p, SignedPerm::identity(n), 0)) fail(Errc::internal, "no reduced distinguished subexpression found");
    return {base, mask};
}

bool is_distinguished(int n, const Subexpression& s) {
    const int p = static_cast<int>(s.base.size());
    SignedPerm u = SignedPerm::identity(n);
    for (int j = 1; j <= p; ++j) {
        const std::size_t pos = static_cast<std::size_t>(p - j);
        const SignedPerm su = generator(n, s.base[pos]) * u;
        const SignedPerm next = s.mask[pos] ? su : u;
        if (!bruhat_leq(next, su)) return false;
        u = next;
    }
    return true;
}

JSets j_sets(int n, const Subexpression& s) {
    JSets out;
    const int p = static_cast<int>(s.base.size());
    SignedPerm u = SignedPerm::identity(n);
    int lu = 0;
    for (int k = 1; k <= p; ++k) {
        const std::size_t pos = static_cast<std::size_t>(p - k);
        if (s.mask[pos]) u = generator(n, s.base[pos]) * u;
        const int l = length(u);
        if (l > lu)
            out.plus.push_back(k);
        else if (l == lu)
            out.circ.push_back(k);
        else
            out.minus.push_back(k);
        lu = l;
    }
    return out;
}

int CellWord::params() const { return static_cast<int>(std::count(vmask.begin(), vmask.end(), false)); }

CellWord cell_word(const SignedPerm& v, const SignedPerm& w) {
    if (v.n() != w.n()) fail(Errc::dimension, "rank mismatch in cell label");
    if (!is_min_coset_rep(w)) fail(Errc::domain, "w is not a minimal coset representative");
    if (!bruhat_leq(v, w)) fail(Errc::domain, "v is not below w in Bruhat order");
    const int n = w.n();
    const Word base = w0_coset_word(n);
    const Subexpression ws = distinguished_subexpr(w, n, base);
    CellWord cw;
    cw.n = n;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (ws.mask[i]) {
            cw.letters.push_back(base[i]);
            cw.base_positions.push_back(static_cast<int>(i) + 1);
        }
    cw.vmask = distinguished_subexpr(v, n, cw.letters).mask;
    return cw;
}

std::string window_string(const SignedPerm& w) {
    const auto win = w.window();
    const bool wide = std::any_of(win.begin(), win.end(), [](int x) { return x > 9; });
    std::string out;
    for (std::size_t i = 0; i < win.size(); ++i) {
        if (wide && i) out += ',';
        out += std::to_string(win[i]);
    }
    return out;
}

SignedPerm parse_window(std::string_view text) {
    std::vector<int> win;
    const bool separated = text.find_first_of(", ") != std::string_view::npos;
    if (separated) {
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) win.push_back(std::stoi(cur));
            cur.clear();
        };
        for (char c : text) {
            if (c == ',' || c == ' ')
                flush();
            else if (std::isdigit(static_cast<unsigned char>(c)))
                cur += c;
            else
                fail(Errc::argument, "malformed window '" + std::string(text) + "'");
        }
        flush();
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail(Errc::argument, "malformed window '" + std::string(text) + "'");
            win.push_back(c - '0');
        }
    }
    if (win.size() < 2) fail(Errc::argument, "window needs at least two entries");
    return SignedPerm::from_window(static_cast<int>(win.size()), win);
}

std::vector<SignedPerm> parabolic_elements(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<SignedPerm> out;
    do {
        out.push_back(SignedPerm::from_window(n, p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<SignedPerm> min_coset_reps(int n) {
    std::vector<SignedPerm> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(product(n, coset_word_from_subset(n, s)));
    }
    return out;
}

}  // namespace ogr
