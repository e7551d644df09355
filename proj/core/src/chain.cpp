#include "sympow/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sympow {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

IntMat IntMat::mul(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat::mul: shape mismatch");
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMat IntMat::hstack(const IntMat& o) const {
  if (rows_ != o.rows_ && o.cols_ != 0 && cols_ != 0)
    throw std::invalid_argument("IntMat::hstack: row mismatch");
  std::size_t rr = std::max(rows_, o.rows_);
  IntMat r(rr, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  return r;
}

IntMat IntMat::column(std::size_t c) const {
  IntMat r(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
  return r;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).get_str();
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  return os.str();
}

SmithResult smith_normal_form(const IntMat& m0, bool with_witnesses) {
  SmithResult res;
  IntMat m = m0;
  const std::size_t R = m.rows(), C = m.cols();
  IntMat u = with_witnesses ? IntMat::identity(R) : IntMat();
  IntMat v = with_witnesses ? IntMat::identity(C) : IntMat();

  auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {  // row dst += q * row src
    for (std::size_t c = 0; c < C; ++c) m.at(dst, c) += q * m.at(src, c);
    if (with_witnesses)
      for (std::size_t c = 0; c < R; ++c) u.at(dst, c) += q * u.at(src, c);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < R; ++r) m.at(r, dst) += q * m.at(r, src);
    if (with_witnesses)
      for (std::size_t r = 0; r < C; ++r) v.at(r, dst) += q * v.at(r, src);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t c = 0; c < C; ++c) m.at(r, c) = -m.at(r, c);
    if (with_witnesses)
      for (std::size_t c = 0; c < R; ++c) u.at(r, c) = -u.at(r, c);
  };

  std::size_t t = 0;
  const std::size_t tmax = std::min(R, C);
  while (t < tmax) {
    // pivot: smallest nonzero |entry| in the trailing submatrix, row-major ties
    std::size_t pr = R, pc = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pr == R || cmp(abs(m.at(i, j)), abs(m.at(pr, pc))) < 0) {
          pr = i;
          pc = j;
        }
      }
    if (pr == R) break;  // trailing submatrix is zero
    m.swap_rows(t, pr);
    if (with_witnesses) u.swap_rows(t, pr);
    m.swap_cols(t, pc);
    if (with_witnesses) v.swap_cols(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (m.at(i, t) != 0) {  // remainder strictly smaller: swap up and restart
          m.swap_rows(t, i);
          if (with_witnesses) u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (m.at(t, j) != 0) {
          m.swap_cols(t, j);
          if (with_witnesses) v.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // the pivot must divide the whole trailing submatrix
      for (std::size_t i = t + 1; i < R && clean; ++i)
        for (std::size_t j = t + 1; j < C && clean; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            add_row(t, i, 1);
            clean = false;
          }
    }
    if (m.at(t, t) < 0) negate_row(t);
    ++t;
  }

  res.rank = 0;
  for (std::size_t k = 0; k < tmax; ++k)
    if (m.at(k, k) != 0) {
      res.invariant_factors.push_back(m.at(k, k));
      ++res.rank;
    }
  res.s = std::move(m);
  if (with_witnesses) {
    res.u = std::move(u);
    res.v = std::move(v);
  }
  return res;
}

IntMat kernel_basis(const IntMat& m) {
  if (m.cols() == 0) return IntMat(0, 0);
  SmithResult s = smith_normal_form(m, true);
  // m * (v e_j) = s_j * u^{-1} e_j, so the v-columns past the rank span ker(m)
  std::size_t nk = m.cols() - s.rank;
  IntMat k(m.cols(), nk);
  for (std::size_t j = 0; j < nk; ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k.at(i, j) = s.v.at(i, s.rank + j);
  return k;
}

std::optional<IntMat> solve_columns(const IntMat& m, const IntMat& b) {
  if (b.cols() == 0) return IntMat(m.cols(), 0);
  SmithResult s = smith_normal_form(m, true);
  // m x = b  <=>  s (v^{-1} x) = u b: solve diagonally, then x = v y
  IntMat ub = s.u.mul(b);
  IntMat y(m.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Int& rhs = ub.at(i, j);
      if (i < std::min(m.rows(), m.cols()) && s.s.at(i, i) != 0) {
        if (rhs % s.s.at(i, i) != 0) return std::nullopt;
        y.at(i, j) = rhs / s.s.at(i, i);
      } else if (rhs != 0) {
        return std::nullopt;
      }
    }
  }
  return s.v.mul(y);
}

std::string HomologyGroup::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (rank == 1)
    s = "Z";
  else if (rank > 1)
    s = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s;
}

std::size_t ChainComplexZ::dim(int k) const {
  if (k < lo || k > hi) return 0;
  return labels[static_cast<std::size_t>(k - lo)].size();
}

bool ChainComplexZ::free() const {
  for (const auto& r : rel)
    if (r.cols() != 0) return false;
  return true;
}

void ChainComplexZ::validate() const {
  if (hi < lo) return;
  auto n = static_cast<std::size_t>(hi - lo + 1);
  if (labels.size() != n || d.size() != n || rel.size() != n)
    throw std::logic_error("ChainComplexZ: ragged data");
  for (int k = lo; k <= hi; ++k) {
    const IntMat& dk = diff(k);
    std::size_t rows_expect = k - 1 >= lo ? dim(k - 1) : 0;
    if (dk.cols() != dim(k) || dk.rows() != rows_expect)
      throw std::logic_error("ChainComplexZ: differential shape");
    if (relations(k).cols() != 0 && relations(k).rows() != dim(k))
      throw std::logic_error("ChainComplexZ: relation shape");
  }
  // d_{k-1} d_k = 0 modulo relations; and d_k(rel_k) ⊆ im rel_{k-1}
  for (int k = lo + 1; k <= hi; ++k) {
    IntMat dd = diff(k - 1).mul(diff(k));
    if (k - 2 >= lo && relations(k - 2).cols() != 0) {
      if (!solve_columns(relations(k - 2), dd)) throw std::logic_error("ChainComplexZ: d∘d not in relations");
    } else if (!dd.is_zero()) {
      throw std::logic_error("ChainComplexZ: d∘d != 0");
    }
    if (relations(k).cols() != 0) {
      IntMat dr = diff(k).mul(relations(k));
      if (k - 1 >= lo && relations(k - 1).cols() != 0) {
        if (!solve_columns(relations(k - 1), dr))
          throw std::logic_error("ChainComplexZ: differential does not descend");
      } else if (!dr.is_zero()) {
        throw std::logic_error("ChainComplexZ: differential does not descend");
      }
    }
  }
}

ChainComplexZ free_complex(int lo, std::vector<std::vector<std::string>> labels,
                           std::vector<IntMat> d) {
  ChainComplexZ c;
  c.lo = lo;
  c.hi = lo + static_cast<int>(labels.size()) - 1;
  c.labels = std::move(labels);
  c.d = std::move(d);
  c.rel.assign(c.labels.size(), IntMat());
  for (std::size_t k = 0; k < c.labels.size(); ++k)
    c.rel[k] = IntMat(c.labels[k].size(), 0);
  c.validate();
  return c;
}

HomologyGroup homology_at(const ChainComplexZ& c, int k) {
  if (k < c.lo || k > c.hi) return HomologyGroup{};
  const std::size_t nk = c.dim(k);
  IntMat dk = c.diff(k);
  IntMat rel_prev = k - 1 >= c.lo ? c.relations(k - 1) : IntMat(dk.rows(), 0);
  IntMat dk1 = k + 1 <= c.hi ? c.diff(k + 1) : IntMat(nk, 0);
  IntMat rel_k = c.relations(k);
  if (rel_k.cols() == 0) rel_k = IntMat(nk, 0);

  // cycles: v with d_k v ∈ im(rel_{k-1}); generators = the v-block of ker[d_k | rel_{k-1}]
  IntMat neg_rel = rel_prev;
  for (std::size_t i = 0; i < neg_rel.rows(); ++i)
    for (std::size_t j = 0; j < neg_rel.cols(); ++j) neg_rel.at(i, j) = -neg_rel.at(i, j);
  IntMat stacked = dk.hstack(neg_rel);
  IntMat kb = kernel_basis(stacked);
  IntMat g(nk, kb.cols());
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = 0; j < kb.cols(); ++j) g.at(i, j) = kb.at(i, j);

  // boundaries and collapsed relations, expressed in the cycle generators
  IntMat q = dk1.hstack(rel_k);
  auto a = solve_columns(g, q);
  if (!a) throw std::logic_error("homology: boundaries are not cycles");
  IntMat presentation = a->hstack(kernel_basis(g));
  SmithResult s = smith_normal_form(presentation, false);
  HomologyGroup h;
  h.rank = g.cols() - s.rank;
  for (const auto& f : s.invariant_factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

std::map<int, HomologyGroup> homology(const ChainComplexZ& c) {
  std::map<int, HomologyGroup> out;
  for (int k = c.lo; k <= c.hi; ++k) out[k] = homology_at(c, k);
  return out;
}

bool acyclic(const ChainComplexZ& c) {
  for (int k = c.lo; k <= c.hi; ++k)
    if (!homology_at(c, k).trivial()) return false;
  return true;
}

std::string homology_table(const std::map<int, HomologyGroup>& h) {
  std::string out;
  bool any = false;
  for (const auto& [k, g] : h) {
    if (g.trivial()) continue;
    any = true;
    out += "H_" + std::to_string(k) + " = " + g.to_string() + "\n";
  }
  if (!any) out = "H_* = 0\n";
  return out;
}

ChainComplexZ normalized_chains(const PointedSimplicialSet& x, int through_degree) {
  if (through_degree < 0) throw std::invalid_argument("normalized_chains: negative degree");
  bool trustworthy = x.geometric_dim().has_value() || x.dim_bound() >= through_degree + 1;
  if (!trustworthy) throw std::invalid_argument("truncation insufficient");

  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(through_degree) + 1);
  std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(through_degree) + 1);
  std::vector<std::map<std::uint32_t, std::size_t>> pos(static_cast<std::size_t>(through_degree) + 1);
  for (int m = 0; m <= through_degree && m <= x.dim_bound(); ++m) {
    for (std::uint32_t k = 0; k < x.size(m); ++k) {
      if (k == x.basepoint(m) || x.is_degenerate(m, k)) continue;
      pos[static_cast<std::size_t>(m)][k] = basis[static_cast<std::size_t>(m)].size();
      basis[static_cast<std::size_t>(m)].push_back(k);
      labels[static_cast<std::size_t>(m)].push_back(x.id(m, k));
    }
  }
  std::vector<IntMat> d(static_cast<std::size_t>(through_degree) + 1);
  d[0] = IntMat(0, labels[0].size());
  for (int m = 1; m <= through_degree; ++m) {
    auto mi = static_cast<std::size_t>(m);
    IntMat dm(labels[mi - 1].size(), labels[mi].size());
    if (m <= x.dim_bound()) {
      for (std::size_t c = 0; c < basis[mi].size(); ++c) {
        for (int i = 0; i <= m; ++i) {
          std::uint32_t f = x.face(m, i, basis[mi][c]);
          if (f == x.basepoint(m - 1) || x.is_degenerate(m - 1, f)) continue;
          auto it = pos[mi - 1].find(f);
          dm.at(it->second, c) += (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    d[mi] = std::move(dm);
  }
  return free_complex(0, std::move(labels), std::move(d));
}

Int euler(const PointedSimplicialSet& x) {
  if (!x.geometric_dim()) throw std::invalid_argument("truncation insufficient");
  Int chi = 0;
  for (int m = 0; m <= *x.geometric_dim(); ++m) {
    Int c(static_cast<unsigned long>(x.nondegenerate_reduced_count(m)));
    chi += (m % 2 == 0) ? c : -c;
  }
  return chi;
}

std::map<int, HomologyGroup> space_homology(const PointedSimplicialSet& x, int through_degree) {
  int k = through_degree;
  if (k < 0) {
    if (!x.geometric_dim()) throw std::invalid_argument("truncation insufficient");
    k = std::max(0, *x.geometric_dim());
  }
  return homology(normalized_chains(x, k));
}

Int euler_via_homology(const PointedSimplicialSet& x) {
  if (!x.geometric_dim()) throw std::invalid_argument("truncation insufficient");
  Int chi = 0;
  for (const auto& [k, h] : space_homology(x)) {
    Int r(static_cast<unsigned long>(h.rank));
    chi += (k % 2 == 0) ? r : -r;
  }
  return chi;
}

bool acyclic_space(const PointedSimplicialSet& x) {
  if (!x.geometric_dim()) throw std::invalid_argument("truncation insufficient");
  if (*x.geometric_dim() < 0) return true;
  return acyclic(normalized_chains(x, *x.geometric_dim()));
}

}  // namespace sympow
