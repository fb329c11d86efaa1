#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ogr {

// Element of the type D Weyl group, acting on [2n] with w(n+i) = n + w(i) mod 2n
// and an even number of i in [n] with w(i) > n.
class SignedPerm {
public:
    SignedPerm() = default;

    static SignedPerm identity(int n);
    // Full image list w(1..2n); validated.
    static SignedPerm from_images(int n, std::vector<int> images);
    // Window w(1..n); positions n+1..2n completed by the congruence, then validated.
    static SignedPerm from_window(int n, const std::vector<int>& window);

    int n() const { return n_; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return img_; }
    std::vector<int> window() const { return {img_.begin(), img_.begin() + n_}; }
    bool is_identity() const;

    SignedPerm inverse() const;

    // (u * v)(i) = u(v(i))
    friend SignedPerm operator*(const SignedPerm& u, const SignedPerm& v);
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.img_ == b.img_; }
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.img_ < b.img_; }

private:
    int n_ = 0;
    std::vector<int> img_;
};

using Word = std::vector<int>;

struct Subexpression {
    Word base;
    std::vector<bool> mask;
};

SignedPerm generator(int n, int i);
int length(const SignedPerm& w);
bool bruhat_leq(const SignedPerm& u, const SignedPerm& v);

SignedPerm product(int n, const Word& word);
SignedPerm product(int n, const Subexpression& s);
Word selected_letters(const Subexpression& s);

Word w0_coset_word(int n);
Word w0_word(int n);

std::vector<int> subset_of(const SignedPerm& w);
Subexpression coset_word_from_subset(int n, const std::vector<int>& subset);
SignedPerm min_coset_rep(const SignedPerm& w);
bool is_min_coset_rep(const SignedPerm& w);

// A reduced word for w read off its left descents.
Word reduced_word(const SignedPerm& w);

// The reduced distinguished subexpression for v in base (suffix convention).
Subexpression distinguished_subexpr(const SignedPerm& v, int n, const Word& base);
bool is_distinguished(int n, const Subexpression& s);

// Positions in suffix indexing: position k counts from the right end of the word.
struct JSets {
    std::vector<int> plus, circ, minus;
};
JSets j_sets(int n, const Subexpression& s);

// The word layout used by the Deodhar parametrization of the cell (v, w):
// letters of the reduced distinguished word of w inside the fixed w0 coset word,
// with the reduced distinguished mask of v inside it.
struct CellWord {
    int n = 0;
    Word letters;
    std::vector<bool> vmask;
    std::vector<int> base_positions;  // 1-based positions in w0_coset_word(n)
    int params() const;
};
CellWord cell_word(const SignedPerm& v, const SignedPerm& w);

std::string window_string(const SignedPerm& w);
SignedPerm parse_window(std::string_view text);

// Permutations of [n] extended to [2n]: the parabolic subgroup generated by s_1..s_{n-1}.
std::vector<SignedPerm> parabolic_elements(int n);
// Minimal coset representatives, one per even subset of [n].
std::vector<SignedPerm> min_coset_reps(int n);

}  // namespace ogr
