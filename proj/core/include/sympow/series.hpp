#ifndef SYMPOW_SERIES_HPP
#define SYMPOW_SERIES_HPP

#include <string>
#include <vector>

#include "sympow/chain.hpp"
#include "sympow/sset.hpp"

namespace sympow {

// Truncated formal power series over Z: coefficients c_0..c_N, arithmetic mod t^{N+1}.
struct Series {
  int order = 0;
  std::vector<Int> c;  // size order+1

  static Series zero(int order);
  static Series one(int order);
  bool operator==(const Series&) const = default;
  std::string to_string() const;  // "1 - 2*t + t^2 + O(t^5)"
};

Series series_mul(const Series& a, const Series& b);
// requires c_0 = 1 or -1; throws "non-unit constant term" otherwise
Series series_inv(const Series& a);
// (1-t)^{-c}: nonnegative c expands the inverse power, negative c the polynomial
Series binomial_neg(long c, int order);

struct ZetaReport {
  Series series;               // c_n = reduced Euler characteristic of Sym^n X
  std::vector<Int> chis;       // the per-n values, 0..order
  int required_dim_bound = 0;  // the minimal sufficient dim_bound for this order
};
// c_0 = 1, c_n = chi~(sym_power(n, X)). Requires dim_bound >= order*dim(X)+1.
ZetaReport zeta(const PointedSimplicialSet& x, int order);
// The minimal dim_bound zeta() will accept for a space of geometric dimension g.
int zeta_required_bound(int geometric_dim, int order);

struct MacdonaldReport {
  ZetaReport computed;
  Series closed_form;  // (1-t)^{-chi~(X)}
  bool pass = false;
  int first_divergence = -1;  // -1 when the series agree
};
MacdonaldReport macdonald_check(const PointedSimplicialSet& x, int order);

struct MultiplicativityReport {
  Series zeta_x, zeta_y, zeta_z, product;
  bool pass = false;
};
MultiplicativityReport multiplicativity_check(const Inclusion& j, int order);

struct SuspensionInverseReport {
  Series zeta_x, zeta_sx, product;
  bool pass = false;
};
SuspensionInverseReport suspension_inverse_check(const PointedSimplicialSet& x, int order);

}  // namespace sympow

#endif
