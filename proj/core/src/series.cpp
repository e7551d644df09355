#include "sympow/series.hpp"

#include <stdexcept>

namespace sympow {

Series Series::zero(int order) {
  Series s;
  s.order = order;
  s.c.assign(static_cast<std::size_t>(order) + 1, Int(0));
  return s;
}

Series Series::one(int order) {
  Series s = zero(order);
  s.c[0] = 1;
  return s;
}

std::string Series::to_string() const {
  std::string out;
  bool first = true;
  for (int n = 0; n <= order; ++n) {
    const Int& v = c[static_cast<std::size_t>(n)];
    if (v == 0) continue;
    Int av = abs(v);
    std::string term;
    if (n == 0)
      term = av.get_str();
    else {
      if (av != 1) term = av.get_str() + "*";
      term += (n == 1) ? "t" : "t^" + std::to_string(n);
    }
    if (first) {
      out += (v < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (v < 0 ? " - " : " + ") + term;
    }
  }
  if (first) out = "0";
  out += " + O(t^" + std::to_string(order + 1) + ")";
  return out;
}

Series series_mul(const Series& a, const Series& b) {
  if (a.order != b.order) throw std::invalid_argument("series_mul: order mismatch");
  Series r = Series::zero(a.order);
  for (int i = 0; i <= a.order; ++i)
    for (int j = 0; i + j <= a.order; ++j)
      r.c[static_cast<std::size_t>(i + j)] +=
          a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
  return r;
}

Series series_inv(const Series& a) {
  if (a.c[0] != 1 && a.c[0] != -1) throw std::invalid_argument("non-unit constant term");
  Series r = Series::zero(a.order);
  r.c[0] = a.c[0];  // (±1)^{-1} = ±1
  for (int n = 1; n <= a.order; ++n) {
    Int acc = 0;
    for (int k = 1; k <= n; ++k)
      acc += a.c[static_cast<std::size_t>(k)] * r.c[static_cast<std::size_t>(n - k)];
    r.c[static_cast<std::size_t>(n)] = -acc * a.c[0];
  }
  return r;
}

Series binomial_neg(long c, int order) {
  Series r = Series::one(order);
  if (c >= 0) {
    // (1-t)^{-c}: coefficients C(n+c-1, n)
    for (int n = 1; n <= order; ++n) {
      Int v = 1;
      for (int k = 0; k < n; ++k) {
        v *= c + k;
        v /= k + 1;
      }
      r.c[static_cast<std::size_t>(n)] = v;
    }
  } else {
    // (1-t)^{|c|}: C(|c|, n) (-1)^n
    long d = -c;
    for (int n = 1; n <= order && n <= d; ++n) {
      Int v = 1;
      for (int k = 0; k < n; ++k) {
        v *= d - k;
        v /= k + 1;
      }
      if (n % 2 != 0) v = -v;
      r.c[static_cast<std::size_t>(n)] = v;
    }
  }
  return r;
}

int zeta_required_bound(int geometric_dim, int order) {
  int g = geometric_dim < 0 ? 0 : geometric_dim;
  return order * g + 1;
}

ZetaReport zeta(const PointedSimplicialSet& x, int order) {
  if (order < 0) throw std::invalid_argument("zeta: negative order");
  if (!x.geometric_dim()) throw std::invalid_argument("truncation insufficient");
  int need = zeta_required_bound(*x.geometric_dim(), order);
  if (x.dim_bound() < need) throw std::invalid_argument("truncation insufficient");
  ZetaReport rep;
  rep.required_dim_bound = need;
  rep.series = Series::zero(order);
  rep.series.c[0] = 1;
  rep.chis.push_back(1);  // Sym^0 X = S^0
  for (int n = 1; n <= order; ++n) {
    Int chi = euler(sym_power(n, x));
    rep.series.c[static_cast<std::size_t>(n)] = chi;
    rep.chis.push_back(chi);
  }
  return rep;
}

MacdonaldReport macdonald_check(const PointedSimplicialSet& x, int order) {
  MacdonaldReport rep;
  rep.computed = zeta(x, order);
  Int chi = euler(x);
  if (!chi.fits_slong_p()) throw std::logic_error("macdonald_check: chi overflow");
  rep.closed_form = binomial_neg(chi.get_si(), order);
  rep.pass = true;
  for (int n = 0; n <= order; ++n)
    if (rep.computed.series.c[static_cast<std::size_t>(n)] !=
        rep.closed_form.c[static_cast<std::size_t>(n)]) {
      rep.pass = false;
      rep.first_divergence = n;
      break;
    }
  return rep;
}

MultiplicativityReport multiplicativity_check(const Inclusion& j, int order) {
  MultiplicativityReport rep;
  PointedSimplicialSet z = quotient_by_subobject(j).quotient;
  rep.zeta_x = zeta(j.map.source, order).series;
  rep.zeta_y = zeta(j.map.target, order).series;
  rep.zeta_z = zeta(z, order).series;
  rep.product = series_mul(rep.zeta_x, rep.zeta_z);
  rep.pass = rep.product == rep.zeta_y;
  return rep;
}

SuspensionInverseReport suspension_inverse_check(const PointedSimplicialSet& x, int order) {
  SuspensionInverseReport rep;
  rep.zeta_x = zeta(x, order).series;
  rep.zeta_sx = zeta(suspend(x), order).series;
  rep.product = series_mul(rep.zeta_sx, rep.zeta_x);
  rep.pass = rep.product == Series::one(order);
  return rep;
}

}  // namespace sympow
