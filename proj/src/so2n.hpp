#pragma once

#include <optional>
#include <vector>

#include "exact.hpp"
#include "weyl.hpp"

namespace ogr {

// Gram matrix [[0, Id], [Id, 0]] of the split quadratic form.
QMatrix form_q(int n);

// phi_i applied to [[a, b], [c, d]].
QMatrix phi(int n, int i, const Rational& a, const Rational& b, const Rational& c, const Rational& d);
QMatrix x_gen(int n, int i, const Rational& t);
QMatrix sdot(int n, int i);
PMatrix x_gen_eps(int n, int i);

bool in_group(const QMatrix& g);
bool is_isotropic(const QMatrix& x);

struct ChartPoint {
    int n = 0;
    QMatrix X;                      // n x 2n
    std::optional<SkewMatrix> A;    // present when the left block is invertible
};

ChartPoint pi_n(const QMatrix& g);
ChartPoint from_skew(const SkewMatrix& a);
SkewMatrix chart(const ChartPoint& p);

ChartPoint marsh_rietsch(int n, const std::vector<Rational>& t);
PMatrix z_family(int n);
ChartPoint deodhar_point(const SignedPerm& v, const SignedPerm& w, const std::vector<Rational>& t);

}  // namespace ogr
