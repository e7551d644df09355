#include "sympow/chain_sym.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympow {

std::size_t Cochain::dim(int q) const {
  if (q < lo || q > hi) return 0;
  return labels[static_cast<std::size_t>(q - lo)].size();
}

void Cochain::validate() const {
  if (hi < lo) return;
  auto n = static_cast<std::size_t>(hi - lo + 1);
  if (labels.size() != n || d.size() != n) throw std::logic_error("Cochain: ragged data");
  for (int q = lo; q <= hi; ++q) {
    std::size_t rows_expect = q + 1 <= hi ? dim(q + 1) : 0;
    if (diff(q).cols() != dim(q) || diff(q).rows() != rows_expect)
      throw std::logic_error("Cochain: differential shape");
  }
  for (int q = lo; q + 1 <= hi; ++q)
    if (!diff(q + 1).mul(diff(q)).is_zero()) throw std::logic_error("Cochain: d∘d != 0");
}

Cochain cochain_unit() {
  Cochain c;
  c.lo = 0;
  c.hi = 0;
  c.labels = {{"e"}};
  c.d = {IntMat(0, 1)};
  return c;
}

Cochain cochain_two_term(int lo) {
  Cochain c;
  c.lo = lo;
  c.hi = lo + 1;
  c.labels = {{"x"}, {"y"}};
  IntMat d0(1, 1);
  d0.at(0, 0) = 1;
  c.d = {d0, IntMat(0, 1)};
  c.validate();
  return c;
}

Cochain paper_example_complex() { return cochain_two_term(-1); }

Cochain total_tensor(const Cochain& x, const Cochain& y) {
  x.validate();
  y.validate();
  Cochain t;
  t.lo = x.lo + y.lo;
  t.hi = x.hi + y.hi;
  if (x.hi < x.lo || y.hi < y.lo) {
    t.hi = t.lo - 1;
    return t;
  }
  auto n = static_cast<std::size_t>(t.hi - t.lo + 1);
  t.labels.resize(n);
  // basis of degree k: pairs (p, i) x (q, j), p + q = k
  struct Pair {
    int p;
    std::size_t i, j;
  };
  std::vector<std::vector<Pair>> basis(n);
  for (int p = x.lo; p <= x.hi; ++p)
    for (int q = y.lo; q <= y.hi; ++q)
      for (std::size_t i = 0; i < x.dim(p); ++i)
        for (std::size_t j = 0; j < y.dim(q); ++j) {
          auto k = static_cast<std::size_t>(p + q - t.lo);
          basis[k].push_back({p, i, j});
          t.labels[k].push_back(x.labels[static_cast<std::size_t>(p - x.lo)][i] + "⊗" +
                                y.labels[static_cast<std::size_t>(q - y.lo)][j]);
        }
  auto find_index = [&](int k, int p, std::size_t i, std::size_t j) -> std::size_t {
    const auto& b = basis[static_cast<std::size_t>(k - t.lo)];
    for (std::size_t r = 0; r < b.size(); ++r)
      if (b[r].p == p && b[r].i == i && b[r].j == j) return r;
    throw std::logic_error("total_tensor: missing basis element");
  };
  t.d.resize(n);
  for (int k = t.lo; k <= t.hi; ++k) {
    auto ki = static_cast<std::size_t>(k - t.lo);
    std::size_t rows = k + 1 <= t.hi ? t.labels[ki + 1].size() : 0;
    IntMat dk(rows, t.labels[ki].size());
    if (rows) {
      for (std::size_t c = 0; c < basis[ki].size(); ++c) {
        auto [p, i, j] = basis[ki][c];
        int q = k - p;
        // dx ⊗ y
        if (p + 1 <= x.hi) {
          const IntMat& dx = x.diff(p);
          for (std::size_t r = 0; r < dx.rows(); ++r)
            if (dx.at(r, i) != 0)
              dk.at(find_index(k + 1, p + 1, r, j), c) += dx.at(r, i);
        }
        // (-1)^p x ⊗ dy
        if (q + 1 <= y.hi) {
          const IntMat& dy = y.diff(q);
          for (std::size_t r = 0; r < dy.rows(); ++r)
            if (dy.at(r, j) != 0) {
              Int v = dy.at(r, j);
              if (p % 2 != 0) v = -v;
              dk.at(find_index(k + 1, p, i, r), c) += v;
            }
        }
      }
    }
    t.d[ki] = std::move(dk);
  }
  t.validate();
  return t;
}

std::size_t PresentedCochain::dim(int q) const {
  if (q < lo || q > hi) return 0;
  return labels[static_cast<std::size_t>(q - lo)].size();
}

void PresentedCochain::validate() const {
  ChainComplexZ h;
  h.lo = -hi;
  h.hi = -lo;
  if (hi < lo) return;
  auto n = static_cast<std::size_t>(hi - lo + 1);
  h.labels.resize(n);
  h.d.resize(n);
  h.rel.resize(n);
  for (int k = h.lo; k <= h.hi; ++k) {
    int q = -k;  // cochain degree
    h.labels[static_cast<std::size_t>(k - h.lo)] = labels[static_cast<std::size_t>(q - lo)];
    h.d[static_cast<std::size_t>(k - h.lo)] = d[static_cast<std::size_t>(q - lo)];
    h.rel[static_cast<std::size_t>(k - h.lo)] = rel[static_cast<std::size_t>(q - lo)];
  }
  h.validate();
}

std::map<int, HomologyGroup> PresentedCochain::homology() const {
  std::map<int, HomologyGroup> out;
  if (hi < lo) return out;
  ChainComplexZ h;
  h.lo = -hi;
  h.hi = -lo;
  auto n = static_cast<std::size_t>(hi - lo + 1);
  h.labels.resize(n);
  h.d.resize(n);
  h.rel.resize(n);
  for (int k = h.lo; k <= h.hi; ++k) {
    int q = -k;
    h.labels[static_cast<std::size_t>(k - h.lo)] = labels[static_cast<std::size_t>(q - lo)];
    h.d[static_cast<std::size_t>(k - h.lo)] = d[static_cast<std::size_t>(q - lo)];
    h.rel[static_cast<std::size_t>(k - h.lo)] = rel[static_cast<std::size_t>(q - lo)];
  }
  for (const auto& [k, g] : sympow::homology(h)) out[-k] = g;
  return out;
}

PresentedCochain presented_of(const Cochain& x) {
  PresentedCochain p;
  p.lo = x.lo;
  p.hi = x.hi;
  p.labels = x.labels;
  p.d = x.d;
  p.rel.resize(x.labels.size());
  for (std::size_t k = 0; k < x.labels.size(); ++k) p.rel[k] = IntMat(x.labels[k].size(), 0);
  return p;
}

namespace {

// Flattened tensor-word bookkeeping for X^{⊗n}.
struct WordTable {
  // global entries (degree, index within degree)
  std::vector<std::pair<int, std::size_t>> entries;
  // per total degree (offset by lo_n): word lists; a word is a vector of entry ids
  int lo = 0, hi = -1;
  std::vector<std::vector<std::vector<std::size_t>>> words;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;

  std::size_t find(int degree, const std::vector<std::size_t>& w) const {
    auto& m = index[static_cast<std::size_t>(degree - lo)];
    auto it = m.find(w);
    if (it == m.end()) throw std::logic_error("WordTable: missing word");
    return it->second;
  }
};

WordTable build_words(const Cochain& x, int n) {
  WordTable wt;
  for (int q = x.lo; q <= x.hi; ++q)
    for (std::size_t i = 0; i < x.dim(q); ++i) wt.entries.push_back({q, i});
  wt.lo = n * x.lo;
  wt.hi = n * x.hi;
  if (x.hi < x.lo) {
    wt.hi = wt.lo - 1;
    return wt;
  }
  auto span = static_cast<std::size_t>(wt.hi - wt.lo + 1);
  wt.words.resize(span);
  wt.index.resize(span);
  std::vector<std::size_t> cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int pos, int deg) -> void {
    if (pos == n) {
      auto k = static_cast<std::size_t>(deg - wt.lo);
      wt.index[k][cur] = wt.words[k].size();
      wt.words[k].push_back(cur);
      return;
    }
    for (std::size_t e = 0; e < wt.entries.size(); ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, deg + wt.entries[e].first);
    }
  };
  if (n > 0) rec(rec, 0, 0);
  return wt;
}

Cochain tensor_power_cochain(const Cochain& x, int n, const WordTable& wt) {
  Cochain t;
  t.lo = wt.lo;
  t.hi = wt.hi;
  if (t.hi < t.lo) return t;
  auto span = static_cast<std::size_t>(t.hi - t.lo + 1);
  t.labels.resize(span);
  for (int k = t.lo; k <= t.hi; ++k) {
    auto ki = static_cast<std::size_t>(k - t.lo);
    for (const auto& w : wt.words[ki]) {
      std::string l;
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        auto [q, i] = wt.entries[w[pos]];
        if (pos) l += "⊗";
        l += x.labels[static_cast<std::size_t>(q - x.lo)][i];
      }
      t.labels[ki].push_back(l);
    }
  }
  t.d.resize(span);
  for (int k = t.lo; k <= t.hi; ++k) {
    auto ki = static_cast<std::size_t>(k - t.lo);
    std::size_t rows = k + 1 <= t.hi ? t.labels[ki + 1].size() : 0;
    IntMat dk(rows, t.labels[ki].size());
    if (rows) {
      for (std::size_t c = 0; c < wt.words[ki].size(); ++c) {
        const auto& w = wt.words[ki][c];
        int sign_deg = 0;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
          auto [q, i] = wt.entries[w[pos]];
          if (q + 1 <= x.hi) {
            const IntMat& dq = x.diff(q);
            for (std::size_t r = 0; r < dq.rows(); ++r) {
              if (dq.at(r, i) == 0) continue;
              std::vector<std::size_t> w2 = w;
              // entry id of (q+1, r)
              std::size_t eid = 0;
              for (; eid < wt.entries.size(); ++eid)
                if (wt.entries[eid] == std::make_pair(q + 1, r)) break;
              w2[pos] = eid;
              Int v = dq.at(r, i);
              if (sign_deg % 2 != 0) v = -v;
              dk.at(wt.find(k + 1, w2), c) += v;
            }
          }
          sign_deg += q;
        }
      }
    }
    t.d[ki] = std::move(dk);
  }
  t.validate();
  return t;
}

IntMat transposition_matrix(const Cochain& x, const WordTable& wt, int j, int degree) {
  auto ki = static_cast<std::size_t>(degree - wt.lo);
  std::size_t nwords = wt.words[ki].size();
  IntMat a(nwords, nwords);
  for (std::size_t c = 0; c < nwords; ++c) {
    std::vector<std::size_t> w = wt.words[ki][c];
    int p = wt.entries[w[static_cast<std::size_t>(j)]].first;
    int q = wt.entries[w[static_cast<std::size_t>(j) + 1]].first;
    std::swap(w[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(j) + 1]);
    Int sign = (p % 2 != 0 && q % 2 != 0) ? -1 : 1;
    a.at(wt.find(degree, w), c) += sign;
  }
  (void)x;
  return a;
}

}  // namespace

IntMat koszul_transposition(const Cochain& x, int n, int j, int degree) {
  if (j < 0 || j + 1 >= n) throw std::invalid_argument("koszul_transposition: bad index");
  WordTable wt = build_words(x, n);
  if (degree < wt.lo || degree > wt.hi) return IntMat(0, 0);
  return transposition_matrix(x, wt, j, degree);
}

PresentedCochain sym_naive(int n, const Cochain& x) {
  if (n < 0) throw std::invalid_argument("sym_naive: negative exponent");
  if (n > 4) throw std::invalid_argument("sym_naive: exponent over cap");
  x.validate();
  if (n == 0) return presented_of(cochain_unit());
  if (n == 1) return presented_of(x);

  WordTable wt = build_words(x, n);
  Cochain xp = tensor_power_cochain(x, n, wt);
  PresentedCochain out = presented_of(xp);
  if (xp.hi < xp.lo) return out;

  // generator matrices per degree, with their algebra checked
  for (int k = xp.lo; k <= xp.hi; ++k) {
    auto ki = static_cast<std::size_t>(k - xp.lo);
    std::size_t nw = wt.words[ki].size();
    std::vector<IntMat> gens;
    for (int j = 0; j + 1 < n; ++j) gens.push_back(transposition_matrix(x, wt, j, k));
    IntMat id = IntMat::identity(nw);
    for (int j = 0; j + 1 < n; ++j) {
      if (!(gens[static_cast<std::size_t>(j)].mul(gens[static_cast<std::size_t>(j)]) == id))
        throw std::logic_error("sym_naive: involution relation fails");
      if (j + 2 < n) {
        const IntMat& a = gens[static_cast<std::size_t>(j)];
        const IntMat& b = gens[static_cast<std::size_t>(j) + 1];
        if (!(a.mul(b).mul(a) == b.mul(a).mul(b)))
          throw std::logic_error("sym_naive: braid relation fails");
      }
      for (int l = j + 2; l + 1 < n; ++l) {
        const IntMat& a = gens[static_cast<std::size_t>(j)];
        const IntMat& b = gens[static_cast<std::size_t>(l)];
        if (!(a.mul(b) == b.mul(a))) throw std::logic_error("sym_naive: commutation relation fails");
      }
    }
    // the differential commutes with the action
    if (k + 1 <= xp.hi) {
      for (int j = 0; j + 1 < n; ++j) {
        IntMat up = transposition_matrix(x, wt, j, k + 1);
        if (!(xp.diff(k).mul(gens[static_cast<std::size_t>(j)]) == up.mul(xp.diff(k))))
          throw std::logic_error("sym_naive: action does not commute with the differential");
      }
    }
    // relations sigma v - v over the generators and the word basis
    std::vector<std::vector<Int>> cols;
    for (int j = 0; j + 1 < n; ++j) {
      const IntMat& a = gens[static_cast<std::size_t>(j)];
      for (std::size_t c = 0; c < nw; ++c) {
        std::vector<Int> col(nw);
        bool nonzero = false;
        for (std::size_t r = 0; r < nw; ++r) {
          col[r] = a.at(r, c) - (r == c ? 1 : 0);
          if (col[r] != 0) nonzero = true;
        }
        if (nonzero) cols.push_back(std::move(col));
      }
    }
    IntMat rel(nw, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < nw; ++r) rel.at(r, c) = cols[c][r];
    out.rel[ki] = std::move(rel);
  }
  out.validate();
  return out;
}

std::vector<IntMat> tensor_power_map(int n, const Cochain& x, const Cochain& y,
                                     const std::vector<IntMat>& f) {
  if (x.lo != y.lo || x.hi != y.hi)
    throw std::invalid_argument("tensor_power_map: degree ranges must agree");
  WordTable wx = build_words(x, n);
  WordTable wy = build_words(y, n);
  std::vector<IntMat> out;
  if (wx.hi < wx.lo) return out;
  for (int k = wx.lo; k <= wx.hi; ++k) {
    auto ki = static_cast<std::size_t>(k - wx.lo);
    IntMat fk(wy.words[ki].size(), wx.words[ki].size());
    for (std::size_t c = 0; c < wx.words[ki].size(); ++c) {
      const auto& w = wx.words[ki][c];
      // expand the product of columns
      std::vector<std::pair<std::vector<std::size_t>, Int>> terms{{{}, Int(1)}};
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        auto [q, i] = wx.entries[w[pos]];
        const IntMat& fq = f[static_cast<std::size_t>(q - x.lo)];
        std::vector<std::pair<std::vector<std::size_t>, Int>> next;
        for (const auto& [word, coef] : terms)
          for (std::size_t r = 0; r < fq.rows(); ++r) {
            if (fq.at(r, i) == 0) continue;
            std::size_t eid = 0;
            for (; eid < wy.entries.size(); ++eid)
              if (wy.entries[eid] == std::make_pair(q, r)) break;
            auto w2 = word;
            w2.push_back(eid);
            next.push_back({std::move(w2), coef * fq.at(r, i)});
          }
        terms = std::move(next);
      }
      for (const auto& [word, coef] : terms) fk.at(wy.find(k, word), c) += coef;
    }
    out.push_back(std::move(fk));
  }
  return out;
}

bool sym_naive_map_surjective(int n, const Cochain& x, const Cochain& y,
                              const std::vector<IntMat>& f) {
  PresentedCochain sy = sym_naive(n, y);
  auto fp = tensor_power_map(n, x, y, f);
  if (sy.hi < sy.lo) return true;
  for (int k = sy.lo; k <= sy.hi; ++k) {
    auto ki = static_cast<std::size_t>(k - sy.lo);
    // surjective on the quotient: im f^{⊗n} + im rel = Z^{dim}
    IntMat join = fp[ki].hstack(sy.rel[ki]);
    SmithResult s = smith_normal_form(join, false);
    if (s.rank != sy.dim(k)) return false;
    for (const auto& v : s.invariant_factors)
      if (v != 1) return false;
  }
  return true;
}

ChainContrastReport contrast_report(const Cochain& x) {
  ChainContrastReport r;
  r.input_homology = presented_of(x).homology();
  r.input_acyclic = true;
  for (const auto& [k, g] : r.input_homology)
    if (!g.trivial()) r.input_acyclic = false;
  r.sym2_homology = sym_naive(2, x).homology();
  r.sym2_nontrivial = false;
  for (const auto& [k, g] : r.sym2_homology)
    if (!g.trivial()) r.sym2_nontrivial = true;
  return r;
}

}  // namespace sympow
