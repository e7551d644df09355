#include "sympow/box.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sympow/codec.hpp"

namespace sympow {

namespace {

struct ImageData {
  std::vector<std::vector<bool>> in_image;        // per level, over Y
  std::vector<std::vector<std::uint32_t>> preim;  // per level, Y index -> X index (or UINT32_MAX)
};

ImageData image_data(const Inclusion& f) {
  const auto& m = f.map;
  ImageData d;
  int dim = m.target.dim_bound();
  d.in_image.resize(static_cast<std::size_t>(dim) + 1);
  d.preim.resize(static_cast<std::size_t>(dim) + 1);
  for (int lvl = 0; lvl <= dim; ++lvl) {
    d.in_image[static_cast<std::size_t>(lvl)].assign(m.target.size(lvl), false);
    d.preim[static_cast<std::size_t>(lvl)].assign(m.target.size(lvl), UINT32_MAX);
    for (std::uint32_t x = 0; x < m.source.size(lvl); ++x) {
      if (x == m.source.basepoint(lvl)) continue;
      std::uint32_t y = m.apply(lvl, x);
      d.in_image[static_cast<std::size_t>(lvl)][y] = true;
      d.preim[static_cast<std::size_t>(lvl)][y] = x;
    }
  }
  return d;
}

int power_bound(int g, int k) {
  if (k == 0) return 0;  // the empty smash power is the unit S^0
  if (g < 0) return -1;  // a point factor collapses everything
  return k * g;
}

int smash_bound(int a, int b) { return (a < 0 || b < 0) ? -1 : a + b; }

std::optional<int> stage_bound(const PointedSimplicialSet& y, int n) {
  if (!y.geometric_dim()) return std::nullopt;
  return power_bound(*y.geometric_dim(), n);
}

std::string tuple_id(const PointedSimplicialSet& y, int m, const std::vector<std::uint32_t>& t) {
  if (t.size() == 1) return y.id(m, t[0]);
  std::vector<std::string> parts;
  parts.reserve(t.size());
  for (auto k : t) parts.push_back(y.id(m, k));
  return encode_tuple(parts);
}

std::string multiset_id(const PointedSimplicialSet& y, int m, const std::vector<std::uint32_t>& t) {
  if (t.size() == 1) return y.id(m, t[0]);
  std::vector<std::string> parts;
  parts.reserve(t.size());
  for (auto k : t) parts.push_back(y.id(m, k));
  return encode_multiset(parts);
}

using Tuple = std::vector<std::uint32_t>;

template <class KeepFn>
void enumerate_stage(const PointedSimplicialSet& y, int n, bool sorted, KeepFn keep,
                     std::vector<std::vector<Tuple>>& out) {
  out.assign(static_cast<std::size_t>(y.dim_bound()) + 1, {});
  for (int m = 0; m <= y.dim_bound(); ++m) {
    std::vector<std::uint32_t> nonbase;
    for (std::uint32_t k = 0; k < y.size(m); ++k)
      if (k != y.basepoint(m)) nonbase.push_back(k);
    Tuple cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, std::size_t from) -> void {
      if (pos == n) {
        if (keep(m, cur)) out[static_cast<std::size_t>(m)].push_back(cur);
        return;
      }
      for (std::size_t j = sorted ? from : 0; j < nonbase.size(); ++j) {
        cur[static_cast<std::size_t>(pos)] = nonbase[j];
        self(self, pos + 1, j);
      }
    };
    if (!nonbase.empty()) rec(rec, 0, 0);
  }
}

int image_count(const ImageData& im, int m, const Tuple& t) {
  int c = 0;
  for (auto k : t)
    if (im.in_image[static_cast<std::size_t>(m)][k]) ++c;
  return c;
}

struct BuiltStage {
  PointedSimplicialSet carrier;
  std::vector<std::vector<Tuple>> payloads;  // indexed by final carrier index; empty at base
};

BuiltStage assemble_stage(const PointedSimplicialSet& y, bool sorted,
                          const std::vector<std::vector<Tuple>>& lists,
                          std::optional<int> claimed) {
  const int d = y.dim_bound();
  PointedSimplicialSet::Raw raw;
  raw.dim_bound = d;
  raw.claimed_geom_bound = claimed;
  raw.ids.resize(static_cast<std::size_t>(d) + 1);
  raw.faces.resize(static_cast<std::size_t>(d) + 1);
  raw.degens.resize(static_cast<std::size_t>(d) + 1);
  std::vector<std::map<Tuple, std::uint32_t>> index(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.ids[mi].push_back("*");
    for (std::uint32_t k = 0; k < lists[mi].size(); ++k) {
      index[mi][lists[mi][k]] = k + 1;
      raw.ids[mi].push_back(sorted ? multiset_id(y, m, lists[mi][k])
                                   : tuple_id(y, m, lists[mi][k]));
    }
  }
  auto structure = [&](int m, int i, const Tuple& t, bool face) -> std::uint32_t {
    Tuple q(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
      q[k] = face ? y.face(m, i, t[k]) : y.degeneracy(m, i, t[k]);
      if (face && q[k] == y.basepoint(m - 1)) return 0;
    }
    if (sorted) std::sort(q.begin(), q.end());
    int tm = face ? m - 1 : m + 1;
    auto it = index[static_cast<std::size_t>(tm)].find(q);
    if (it == index[static_cast<std::size_t>(tm)].end())
      throw std::logic_error("box stage: structure map leaves the stage");
    return it->second;
  };
  for (int m = 1; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.faces[mi].assign(static_cast<std::size_t>(m) + 1,
                         std::vector<std::uint32_t>(lists[mi].size() + 1, 0));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t k = 0; k < lists[mi].size(); ++k)
        raw.faces[mi][static_cast<std::size_t>(i)][k + 1] = structure(m, i, lists[mi][k], true);
  }
  for (int m = 0; m < d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.degens[mi].assign(static_cast<std::size_t>(m) + 1,
                          std::vector<std::uint32_t>(lists[mi].size() + 1, 0));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t k = 0; k < lists[mi].size(); ++k)
        raw.degens[mi][static_cast<std::size_t>(i)][k + 1] = structure(m, i, lists[mi][k], false);
  }
  auto fin = PointedSimplicialSet::finalize(std::move(raw));
  BuiltStage bs;
  bs.payloads.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    bs.payloads[mi].resize(lists[mi].size() + 1);
    for (std::uint32_t k = 0; k < lists[mi].size(); ++k)
      bs.payloads[mi][fin.new_index[mi][k + 1]] = lists[mi][k];
  }
  bs.carrier = std::move(fin.sset);
  return bs;
}

void check_stage_args(int n, int i) {
  if (n < 1) throw std::invalid_argument("box: n must be >= 1");
  if (i < 0 || i > n) throw std::invalid_argument("box: need 0 <= i <= n");
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511627776ull + 0x1b3;  // 2^40 + 0x1b3 = FNV-1a 64 prime
  }
  return h;
}

// Canonical structure dump of a pointed simplicial set with an optional
// relabeling and optional group-action rows; used for the independent
// certificate re-check: transporting the LHS through the witness must
// reproduce the RHS dump verbatim.
std::string structure_dump(const PointedSimplicialSet& s,
                           const std::vector<std::vector<std::string>>* relabel,
                           const std::vector<std::vector<std::vector<std::uint32_t>>>* actions) {
  auto name = [&](int m, std::uint32_t k) -> const std::string& {
    return relabel ? (*relabel)[static_cast<std::size_t>(m)][k] : s.id(m, k);
  };
  std::string out;
  for (int m = 0; m <= s.dim_bound(); ++m) {
    std::vector<std::uint32_t> order(s.size(m));
    for (std::uint32_t k = 0; k < s.size(m); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return name(m, a) < name(m, b); });
    for (auto k : order) {
      out += std::to_string(m) + "|" + name(m, k);
      if (k == s.basepoint(m)) out += "|base";
      if (m >= 1)
        for (int i = 0; i <= m; ++i) out += "|d" + std::to_string(i) + "=" + name(m - 1, s.face(m, i, k));
      if (m < s.dim_bound())
        for (int i = 0; i <= m; ++i)
          out += "|s" + std::to_string(i) + "=" + name(m + 1, s.degeneracy(m, i, k));
      if (actions)
        for (std::size_t g = 0; g < actions->size(); ++g)
          out += "|g" + std::to_string(g) + "=" + name(m, (*actions)[g][static_cast<std::size_t>(m)][k]);
      out += "\n";
    }
  }
  return out;
}

Inclusion stage_inclusion(const PointedSimplicialSet& small, const PointedSimplicialSet& big) {
  SimplicialMap m;
  m.source = small;
  m.target = big;
  m.comp.resize(static_cast<std::size_t>(small.dim_bound()) + 1);
  for (int lvl = 0; lvl <= small.dim_bound(); ++lvl) {
    auto& row = m.comp[static_cast<std::size_t>(lvl)];
    row.resize(small.size(lvl));
    for (std::uint32_t k = 0; k < small.size(lvl); ++k)
      row[k] = big.index_of(lvl, small.id(lvl, k));
  }
  return Inclusion(std::move(m));
}

}  // namespace

BoxStage box(const Inclusion& f, int n, int i) {
  check_stage_args(n, i);
  const PointedSimplicialSet& y = f.map.target;
  ImageData im = image_data(f);
  std::vector<std::vector<Tuple>> lists;
  enumerate_stage(y, n, false,
                  [&](int m, const Tuple& t) { return image_count(im, m, t) >= n - i; }, lists);
  BuiltStage bs = assemble_stage(y, false, lists, stage_bound(y, n));
  return BoxStage{n, i, std::move(bs.carrier), std::move(bs.payloads)};
}

TildeStage tilde_box(const Inclusion& f, int n, int i) {
  check_stage_args(n, i);
  const PointedSimplicialSet& y = f.map.target;
  ImageData im = image_data(f);
  std::vector<std::vector<Tuple>> lists;
  enumerate_stage(y, n, true,
                  [&](int m, const Tuple& t) { return image_count(im, m, t) >= n - i; }, lists);
  BuiltStage bs = assemble_stage(y, true, lists, stage_bound(y, n));
  return TildeStage{n, i, std::move(bs.carrier), std::move(bs.payloads)};
}

TildeWithProjection tilde_box_with_projection(const Inclusion& f, int n, int i) {
  BoxStage plain = box(f, n, i);
  TildeStage orb = tilde_box(f, n, i);
  SimplicialMap proj;
  proj.source = plain.carrier;
  proj.target = orb.carrier;
  proj.comp.resize(static_cast<std::size_t>(plain.carrier.dim_bound()) + 1);
  const PointedSimplicialSet& y = f.map.target;
  for (int m = 0; m <= plain.carrier.dim_bound(); ++m) {
    auto& row = proj.comp[static_cast<std::size_t>(m)];
    row.resize(plain.carrier.size(m));
    for (std::uint32_t k = 0; k < plain.carrier.size(m); ++k) {
      if (k == plain.carrier.basepoint(m)) {
        row[k] = orb.carrier.basepoint(m);
      } else {
        Tuple t = plain.tuples[static_cast<std::size_t>(m)][k];
        std::sort(t.begin(), t.end());
        row[k] = orb.carrier.index_of(m, multiset_id(y, m, t));
      }
    }
  }
  proj.validate();
  return TildeWithProjection{std::move(orb), std::move(proj)};
}

QuotientCertificate kunneth_quotient_certificate(const Inclusion& f, int n, int i) {
  check_stage_args(n, i);
  if (i < 1) throw std::invalid_argument("kunneth_quotient_certificate: need i >= 1");
  const PointedSimplicialSet& x = f.map.source;
  const PointedSimplicialSet& y = f.map.target;
  const int d = y.dim_bound();
  ImageData im = image_data(f);

  BoxStage hi = box(f, n, i);
  BoxStage lo = box(f, n, i - 1);
  QuotientResult q = quotient_by_subobject(stage_inclusion(lo.carrier, hi.carrier));

  QuotientResult zq = quotient_by_subobject(f);
  const PointedSimplicialSet& z = zq.quotient;

  PermGroup g = symmetric_group(n);
  EmbeddingSpec young = EmbeddingSpec::young(n - i, i);
  PermGroup h = young.realize();

  // W_m = X^{n-i} ∧ Z^i as a pointed H-set, with its levelwise cor
  using WPayload = std::pair<Tuple, Tuple>;
  std::vector<std::vector<WPayload>> wpayload(static_cast<std::size_t>(d) + 1);
  std::vector<std::map<WPayload, std::uint32_t>> windex(static_cast<std::size_t>(d) + 1);
  std::vector<CorSet> cors;
  std::vector<GSet> wsets;
  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    std::vector<std::uint32_t> xn, zn;
    for (std::uint32_t k = 0; k < x.size(m); ++k)
      if (k != x.basepoint(m)) xn.push_back(k);
    for (std::uint32_t k = 0; k < z.size(m); ++k)
      if (k != z.basepoint(m)) zn.push_back(k);
    std::vector<std::string> ids;
    Tuple xt(static_cast<std::size_t>(n - i)), zt(static_cast<std::size_t>(i));
    auto recz = [&](auto&& self, int pos) -> void {
      if (pos == i) {
        wpayload[mi].push_back({xt, zt});
        return;
      }
      for (auto k : zn) {
        zt[static_cast<std::size_t>(pos)] = k;
        self(self, pos + 1);
      }
    };
    auto recx = [&](auto&& self, int pos) -> void {
      if (pos == n - i) {
        if (i == 0 || !zn.empty()) recz(recz, 0);
        return;
      }
      for (auto k : xn) {
        xt[static_cast<std::size_t>(pos)] = k;
        self(self, pos + 1);
      }
    };
    if ((n - i == 0 || !xn.empty()) && (i == 0 || !zn.empty())) recx(recx, 0);
    for (std::uint32_t c = 0; c < wpayload[mi].size(); ++c) {
      const auto& [a, b] = wpayload[mi][c];
      std::vector<std::string> ap, bp;
      for (auto k : a) ap.push_back(x.id(m, k));
      for (auto k : b) bp.push_back(z.id(m, k));
      ids.push_back(encode_pair(encode_tuple(ap), encode_tuple(bp)));
    }
    PointedSet carrier = make_pointed_set(ids, "*");
    for (std::uint32_t c = 0; c < wpayload[mi].size(); ++c) {
      const auto& [a, b] = wpayload[mi][c];
      std::vector<std::string> ap, bp;
      for (auto k : a) ap.push_back(x.id(m, k));
      for (auto k : b) bp.push_back(z.id(m, k));
      windex[mi][wpayload[mi][c]] = carrier.index_of(encode_pair(encode_tuple(ap), encode_tuple(bp)));
    }
    // reorder payloads to match the sorted carrier
    std::vector<WPayload> sorted_payloads(carrier.size());
    for (const auto& [pl, idx] : windex[mi]) sorted_payloads[idx] = pl;
    wpayload[mi] = std::move(sorted_payloads);

    GSet w{h, carrier, {}};
    w.action.resize(h.order());
    for (std::size_t e = 0; e < h.order(); ++e) {
      const Perm& p = h.elements()[e];
      auto& row = w.action[e];
      row.resize(carrier.size());
      row[carrier.base] = carrier.base;
      for (std::uint32_t c = 0; c < carrier.size(); ++c) {
        if (c == carrier.base) continue;
        const auto& [a, b] = wpayload[mi][c];
        Tuple a2(a.size()), b2(b.size());
        for (std::size_t k = 0; k < a.size(); ++k) a2[p[k]] = a[k];
        for (std::size_t k = 0; k < b.size(); ++k)
          b2[p[k + a.size()] - a.size()] = b[k];
        row[c] = windex[mi].empty() ? 0 : windex[mi].at({a2, b2});
      }
    }
    wsets.push_back(w);
    cors.push_back(cor_with_witness(g, young, wsets.back()));
  }

  // rhs simplicial set from the levelwise cor
  PointedSimplicialSet::Raw raw;
  raw.dim_bound = d;
  if (x.geometric_dim() && z.geometric_dim())
    raw.claimed_geom_bound =
        smash_bound(power_bound(*x.geometric_dim(), n - i), power_bound(*z.geometric_dim(), i));
  raw.ids.resize(static_cast<std::size_t>(d) + 1);
  raw.faces.resize(static_cast<std::size_t>(d) + 1);
  raw.degens.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    const PointedSet& c = cors[mi].gset.carrier;
    raw.ids[mi].push_back("*");
    for (std::uint32_t k = 0; k < c.size(); ++k)
      if (k != c.base) raw.ids[mi].push_back(c.ids[k]);
  }
  // provisional index of a cor class: base -> 0, else position among non-base (sorted)
  auto prov = [&](int m, std::uint32_t cls) -> std::uint32_t {
    const PointedSet& c = cors[static_cast<std::size_t>(m)].gset.carrier;
    if (cls == c.base) return 0;
    return cls < c.base ? cls + 1 : cls;
  };
  auto structure = [&](int m, int i2, std::uint32_t cls, bool face) -> std::uint32_t {
    auto mi = static_cast<std::size_t>(m);
    auto [g0, widx] = cors[mi].rep[cls];
    const auto& [a, b] = wpayload[mi][widx];
    Tuple a2(a.size()), b2(b.size());
    int tm = face ? m - 1 : m + 1;
    for (std::size_t k = 0; k < a.size(); ++k) {
      a2[k] = face ? x.face(m, i2, a[k]) : x.degeneracy(m, i2, a[k]);
      if (face && a2[k] == x.basepoint(tm)) return 0;
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
      b2[k] = face ? z.face(m, i2, b[k]) : z.degeneracy(m, i2, b[k]);
      if (face && b2[k] == z.basepoint(tm)) return 0;
    }
    std::uint32_t w2 = windex[static_cast<std::size_t>(tm)].at({a2, b2});
    return prov(tm, cors[static_cast<std::size_t>(tm)].class_of(g0, w2));
  };
  for (int m = 1; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    const PointedSet& c = cors[mi].gset.carrier;
    raw.faces[mi].assign(static_cast<std::size_t>(m) + 1,
                         std::vector<std::uint32_t>(c.size(), 0));
    for (int i2 = 0; i2 <= m; ++i2)
      for (std::uint32_t cls = 0; cls < c.size(); ++cls)
        if (cls != c.base)
          raw.faces[mi][static_cast<std::size_t>(i2)][prov(m, cls)] = structure(m, i2, cls, true);
  }
  for (int m = 0; m < d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    const PointedSet& c = cors[mi].gset.carrier;
    raw.degens[mi].assign(static_cast<std::size_t>(m) + 1,
                          std::vector<std::uint32_t>(c.size(), 0));
    for (int i2 = 0; i2 <= m; ++i2)
      for (std::uint32_t cls = 0; cls < c.size(); ++cls)
        if (cls != c.base)
          raw.degens[mi][static_cast<std::size_t>(i2)][prov(m, cls)] = structure(m, i2, cls, false);
  }
  auto fin = PointedSimplicialSet::finalize(std::move(raw));
  PointedSimplicialSet rhs = std::move(fin.sset);
  // cor ids were already sorted with "*" least, so the finalize order is stable
  for (int m = 0; m <= d; ++m) {
    const PointedSet& c = cors[static_cast<std::size_t>(m)].gset.carrier;
    for (std::uint32_t k = 0; k < c.size(); ++k)
      if (rhs.id(m, k) != c.ids[k])
        throw std::logic_error("kunneth certificate: cor carrier order mismatch");
  }

  QuotientCertificate cert;
  cert.n = n;
  cert.i = i;
  cert.symmetrized = false;
  cert.lhs = q.quotient;
  cert.rhs = rhs;

  // the witness: a tuple with exactly n-i image coordinates maps to the class of
  // (g_P, (x-preimages along P ascending, z-images along the complement ascending))
  cert.witness.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    auto& row = cert.witness[mi];
    row.resize(cert.lhs.size(m));
    row[cert.lhs.basepoint(m)] = cert.rhs.basepoint(m);
    for (std::uint32_t k = 0; k < cert.lhs.size(m); ++k) {
      if (k == cert.lhs.basepoint(m)) continue;
      std::uint32_t in_hi = hi.carrier.index_of(m, cert.lhs.id(m, k));
      const Tuple& t = hi.tuples[mi][in_hi];
      std::vector<int> pos_x, pos_z;
      for (int c = 0; c < n; ++c) {
        if (im.in_image[mi][t[static_cast<std::size_t>(c)]])
          pos_x.push_back(c);
        else
          pos_z.push_back(c);
      }
      if (static_cast<int>(pos_x.size()) != n - i)
        throw std::logic_error("kunneth certificate: first mismatching simplex " +
                               cert.lhs.id(m, k) + " (wrong image weight)");
      Perm gp(static_cast<std::size_t>(n));
      Tuple xt, zt;
      for (std::size_t c = 0; c < pos_x.size(); ++c) {
        gp[c] = static_cast<std::uint8_t>(pos_x[c]);
        xt.push_back(im.preim[mi][t[static_cast<std::size_t>(pos_x[c])]]);
      }
      for (std::size_t c = 0; c < pos_z.size(); ++c) {
        gp[pos_x.size() + c] = static_cast<std::uint8_t>(pos_z[c]);
        zt.push_back(zq.projection.apply(m, t[static_cast<std::size_t>(pos_z[c])]));
      }
      std::uint32_t widx = windex[mi].at({xt, zt});
      std::uint32_t cls = cors[mi].class_of(g.index_of(gp), widx);
      std::uint32_t r = cert.rhs.index_of(m, cors[mi].gset.carrier.ids[cls]);
      row[k] = r;
    }
  }

  // verify: pointed levelwise bijection
  for (int m = 0; m <= d; ++m) {
    if (cert.lhs.size(m) != cert.rhs.size(m))
      throw std::logic_error("kunneth certificate: size mismatch at level " + std::to_string(m));
    std::vector<bool> seen(cert.rhs.size(m), false);
    for (auto v : cert.witness[static_cast<std::size_t>(m)]) {
      if (seen[v])
        throw std::logic_error("kunneth certificate: witness not injective at level " +
                               std::to_string(m));
      seen[v] = true;
    }
  }
  // verify: faces and degeneracies commute
  auto check_structure = [&](int m, std::uint32_t k) {
    auto mi = static_cast<std::size_t>(m);
    if (m >= 1)
      for (int i2 = 0; i2 <= m; ++i2)
        if (cert.witness[mi - 1][cert.lhs.face(m, i2, k)] !=
            cert.rhs.face(m, i2, cert.witness[mi][k]))
          throw std::logic_error("kunneth certificate: first mismatching simplex " +
                                 cert.lhs.id(m, k) + " (face d" + std::to_string(i2) + ")");
    if (m < d)
      for (int i2 = 0; i2 <= m; ++i2)
        if (cert.witness[mi + 1][cert.lhs.degeneracy(m, i2, k)] !=
            cert.rhs.degeneracy(m, i2, cert.witness[mi][k]))
          throw std::logic_error("kunneth certificate: first mismatching simplex " +
                                 cert.lhs.id(m, k) + " (degeneracy s" + std::to_string(i2) + ")");
  };
  for (int m = 0; m <= d; ++m)
    for (std::uint32_t k = 0; k < cert.lhs.size(m); ++k) check_structure(m, k);

  // verify: Σ_n generators commute; build both action tables for the dump
  std::vector<std::vector<std::vector<std::uint32_t>>> lhs_action, rhs_action;
  for (std::size_t gi = 0; gi < g.generator_indices().size(); ++gi) {
    std::size_t ge = g.generator_indices()[gi];
    const Perm& sigma = g.elements()[ge];
    std::vector<std::vector<std::uint32_t>> la(static_cast<std::size_t>(d) + 1),
        ra(static_cast<std::size_t>(d) + 1);
    for (int m = 0; m <= d; ++m) {
      auto mi = static_cast<std::size_t>(m);
      la[mi].resize(cert.lhs.size(m));
      ra[mi].resize(cert.rhs.size(m));
      la[mi][cert.lhs.basepoint(m)] = cert.lhs.basepoint(m);
      for (std::uint32_t k = 0; k < cert.rhs.size(m); ++k) {
        if (k == cert.rhs.basepoint(m)) {
          ra[mi][k] = k;
          continue;
        }
        std::uint32_t cls = cors[mi].gset.carrier.index_of(cert.rhs.id(m, k));
        std::uint32_t icls = cors[mi].gset.act(ge, cls);
        ra[mi][k] = cert.rhs.index_of(m, cors[mi].gset.carrier.ids[icls]);
      }
      for (std::uint32_t k = 0; k < cert.lhs.size(m); ++k) {
        if (k == cert.lhs.basepoint(m)) continue;
        std::uint32_t in_hi = hi.carrier.index_of(m, cert.lhs.id(m, k));
        Tuple moved = perm_apply(sigma, hi.tuples[mi][in_hi]);
        la[mi][k] = cert.lhs.index_of(m, tuple_id(f.map.target, m, moved));
      }
      for (std::uint32_t k = 0; k < cert.lhs.size(m); ++k)
        if (cert.witness[mi][la[mi][k]] != ra[mi][cert.witness[mi][k]])
          throw std::logic_error("kunneth certificate: first mismatching simplex " +
                                 cert.lhs.id(m, k) + " (generator " + perm_one_line(sigma) + ")");
    }
    lhs_action.push_back(std::move(la));
    rhs_action.push_back(std::move(ra));
  }

  // independent re-check: transported LHS dump must equal the RHS dump
  std::vector<std::vector<std::string>> relabel(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    relabel[static_cast<std::size_t>(m)].resize(cert.lhs.size(m));
    for (std::uint32_t k = 0; k < cert.lhs.size(m); ++k)
      relabel[static_cast<std::size_t>(m)][k] =
          cert.rhs.id(m, cert.witness[static_cast<std::size_t>(m)][k]);
  }
  std::string lhs_dump = structure_dump(cert.lhs, &relabel, &lhs_action);
  std::string rhs_dump = structure_dump(cert.rhs, nullptr, &rhs_action);
  cert.lhs_fingerprint = fnv1a(lhs_dump);
  cert.rhs_fingerprint = fnv1a(rhs_dump);
  cert.recheck_ok = lhs_dump == rhs_dump;
  if (!cert.recheck_ok) throw std::logic_error("kunneth certificate: canonical form mismatch");

  if (cert.lhs.geometric_dim() && cert.rhs.geometric_dim()) {
    cert.lhs_euler = euler(cert.lhs);
    cert.rhs_euler = euler(cert.rhs);
    cert.eulers_known = true;
  }
  return cert;
}

QuotientCertificate sym_kunneth_certificate(const Inclusion& f, int n, int i) {
  check_stage_args(n, i);
  if (i < 1) throw std::invalid_argument("sym_kunneth_certificate: need i >= 1");
  const PointedSimplicialSet& x = f.map.source;
  const PointedSimplicialSet& y = f.map.target;
  const int d = y.dim_bound();
  ImageData im = image_data(f);

  TildeStage hi = tilde_box(f, n, i);
  TildeStage lo = tilde_box(f, n, i - 1);
  QuotientResult q = quotient_by_subobject(stage_inclusion(lo.carrier, hi.carrier));

  QuotientResult zq = quotient_by_subobject(f);
  const PointedSimplicialSet& z = zq.quotient;

  PointedSimplicialSet sx = sym_power(n - i, x);
  PointedSimplicialSet sz = sym_power(i, z);
  PointedSimplicialSet rhs = smash(sx, sz);

  QuotientCertificate cert;
  cert.n = n;
  cert.i = i;
  cert.symmetrized = true;
  cert.lhs = q.quotient;
  cert.rhs = rhs;

  auto sym_component_id = [&](const PointedSimplicialSet& base, int k, int m,
                              const Tuple& sorted_idx) -> std::string {
    if (k == 0) return std::string(static_cast<std::size_t>(m) + 1, '0');  // sphere(0) cell
    if (k == 1) return base.id(m, sorted_idx[0]);
    std::vector<std::string> parts;
    for (auto v : sorted_idx) parts.push_back(base.id(m, v));
    return encode_multiset(parts);
  };

  cert.witness.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    auto& row = cert.witness[mi];
    row.resize(cert.lhs.size(m));
    row[cert.lhs.basepoint(m)] = cert.rhs.basepoint(m);
    for (std::uint32_t k = 0; k < cert.lhs.size(m); ++k) {
      if (k == cert.lhs.basepoint(m)) continue;
      std::uint32_t in_hi = hi.carrier.index_of(m, cert.lhs.id(m, k));
      const Tuple& ms = hi.multisets[mi][in_hi];
      Tuple xt, zt;
      for (auto v : ms) {
        if (im.in_image[mi][v])
          xt.push_back(im.preim[mi][v]);
        else
          zt.push_back(zq.projection.apply(m, v));
      }
      if (static_cast<int>(xt.size()) != n - i)
        throw std::logic_error("sym kunneth certificate: first mismatching simplex " +
                               cert.lhs.id(m, k) + " (wrong image weight)");
      std::sort(xt.begin(), xt.end());
      std::sort(zt.begin(), zt.end());
      std::string rid =
          encode_pair(sym_component_id(x, n - i, m, xt), sym_component_id(z, i, m, zt));
      auto found = cert.rhs.find(m, rid);
      if (!found)
        throw std::logic_error("sym kunneth certificate: first mismatching simplex " +
                               cert.lhs.id(m, k) + " (no Kunneth partner " + rid + ")");
      row[k] = *found;
    }
  }

  for (int m = 0; m <= d; ++m) {
    if (cert.lhs.size(m) != cert.rhs.size(m))
      throw std::logic_error("sym kunneth certificate: size mismatch at level " +
                             std::to_string(m));
    std::vector<bool> seen(cert.rhs.size(m), false);
    for (auto v : cert.witness[static_cast<std::size_t>(m)]) {
      if (seen[v])
        throw std::logic_error("sym kunneth certificate: witness not injective at level " +
                               std::to_string(m));
      seen[v] = true;
    }
  }
  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    for (std::uint32_t k = 0; k < cert.lhs.size(m); ++k) {
      if (m >= 1)
        for (int i2 = 0; i2 <= m; ++i2)
          if (cert.witness[mi - 1][cert.lhs.face(m, i2, k)] !=
              cert.rhs.face(m, i2, cert.witness[mi][k]))
            throw std::logic_error("sym kunneth certificate: first mismatching simplex " +
                                   cert.lhs.id(m, k) + " (face d" + std::to_string(i2) + ")");
      if (m < d)
        for (int i2 = 0; i2 <= m; ++i2)
          if (cert.witness[mi + 1][cert.lhs.degeneracy(m, i2, k)] !=
              cert.rhs.degeneracy(m, i2, cert.witness[mi][k]))
            throw std::logic_error("sym kunneth certificate: first mismatching simplex " +
                                   cert.lhs.id(m, k) + " (degeneracy s" + std::to_string(i2) +
                                   ")");
    }
  }

  std::vector<std::vector<std::string>> relabel(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    relabel[static_cast<std::size_t>(m)].resize(cert.lhs.size(m));
    for (std::uint32_t k = 0; k < cert.lhs.size(m); ++k)
      relabel[static_cast<std::size_t>(m)][k] =
          cert.rhs.id(m, cert.witness[static_cast<std::size_t>(m)][k]);
  }
  std::string lhs_dump = structure_dump(cert.lhs, &relabel, nullptr);
  std::string rhs_dump = structure_dump(cert.rhs, nullptr, nullptr);
  cert.lhs_fingerprint = fnv1a(lhs_dump);
  cert.rhs_fingerprint = fnv1a(rhs_dump);
  cert.recheck_ok = lhs_dump == rhs_dump;
  if (!cert.recheck_ok) throw std::logic_error("sym kunneth certificate: canonical form mismatch");

  if (cert.lhs.geometric_dim() && cert.rhs.geometric_dim()) {
    cert.lhs_euler = euler(cert.lhs);
    cert.rhs_euler = euler(cert.rhs);
    cert.eulers_known = true;
  }
  return cert;
}

SymmetrizableReport symmetrizable_check(const Inclusion& f, int n) {
  if (n < 1) throw std::invalid_argument("symmetrizable_check: n must be >= 1");
  const PointedSimplicialSet& y = f.map.target;
  TildeStage stage = tilde_box(f, n, n - 1);
  PointedSimplicialSet sym = sym_power(n, y);
  const int d = y.dim_bound();

  SymmetrizableReport rep;
  rep.n = n;
  rep.injective = true;
  rep.structure_ok = true;
  std::vector<std::vector<std::uint32_t>> comp(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    rep.stage_sizes.push_back(stage.carrier.reduced_size(m));
    rep.sym_sizes.push_back(sym.reduced_size(m));
    comp[mi].resize(stage.carrier.size(m));
    std::vector<bool> seen(sym.size(m), false);
    for (std::uint32_t k = 0; k < stage.carrier.size(m); ++k) {
      std::optional<std::uint32_t> target;
      if (k == stage.carrier.basepoint(m))
        target = sym.basepoint(m);
      else
        target = sym.find(m, stage.carrier.id(m, k));
      if (!target) {
        rep.injective = false;
        comp[mi][k] = sym.basepoint(m);
        continue;
      }
      if (k != stage.carrier.basepoint(m) && seen[*target]) rep.injective = false;
      seen[*target] = true;
      comp[mi][k] = *target;
    }
  }
  if (rep.injective) {
    for (int m = 1; m <= d && rep.structure_ok; ++m)
      for (int i = 0; i <= m && rep.structure_ok; ++i)
        for (std::uint32_t k = 0; k < stage.carrier.size(m); ++k)
          if (comp[static_cast<std::size_t>(m) - 1][stage.carrier.face(m, i, k)] !=
              sym.face(m, i, comp[static_cast<std::size_t>(m)][k])) {
            rep.structure_ok = false;
            break;
          }
    for (int m = 0; m < d && rep.structure_ok; ++m)
      for (int i = 0; i <= m && rep.structure_ok; ++i)
        for (std::uint32_t k = 0; k < stage.carrier.size(m); ++k)
          if (comp[static_cast<std::size_t>(m) + 1][stage.carrier.degeneracy(m, i, k)] !=
              sym.degeneracy(m, i, comp[static_cast<std::size_t>(m)][k])) {
            rep.structure_ok = false;
            break;
          }
  } else {
    rep.structure_ok = false;
  }
  return rep;
}

TowerReport tower(const Inclusion& f, int nmax) {
  if (nmax < 1) throw std::invalid_argument("tower: nmax must be >= 1");
  TowerReport rep;
  rep.nmax = nmax;
  rep.pass = true;
  const int d = f.map.target.dim_bound();
  for (int n = 1; n <= nmax; ++n) {
    TowerLevelReport lvl;
    lvl.n = n;
    for (int i = 0; i <= n; ++i) {
      BoxStage st = box(f, n, i);
      StageSummary s;
      s.i = i;
      for (int m = 0; m <= d; ++m) s.reduced_sizes.push_back(st.carrier.reduced_size(m));
      s.euler = euler(st.carrier);
      lvl.plain.push_back(std::move(s));
      TildeStage ts = tilde_box(f, n, i);
      StageSummary s2;
      s2.i = i;
      for (int m = 0; m <= d; ++m) s2.reduced_sizes.push_back(ts.carrier.reduced_size(m));
      s2.euler = euler(ts.carrier);
      lvl.symmetrized.push_back(std::move(s2));
    }
    Int teleplain = 0, telesym = 0;
    for (int i = 1; i <= n; ++i) {
      lvl.plain_certs.push_back(kunneth_quotient_certificate(f, n, i));
      lvl.sym_certs.push_back(sym_kunneth_certificate(f, n, i));
      const auto& pc = lvl.plain_certs.back();
      const auto& sc = lvl.sym_certs.back();
      if (!pc.eulers_known || !sc.eulers_known) throw std::invalid_argument("truncation insufficient");
      if (pc.lhs_euler != pc.rhs_euler || sc.lhs_euler != sc.rhs_euler) rep.pass = false;
      // per-step telescoping
      if (lvl.plain[static_cast<std::size_t>(i)].euler -
              lvl.plain[static_cast<std::size_t>(i) - 1].euler !=
          pc.lhs_euler)
        rep.pass = false;
      if (lvl.symmetrized[static_cast<std::size_t>(i)].euler -
              lvl.symmetrized[static_cast<std::size_t>(i) - 1].euler !=
          sc.lhs_euler)
        rep.pass = false;
      teleplain += pc.lhs_euler;
      telesym += sc.lhs_euler;
    }
    lvl.telescoping_plain =
        lvl.plain.back().euler - lvl.plain.front().euler == teleplain;
    lvl.telescoping_sym =
        lvl.symmetrized.back().euler - lvl.symmetrized.front().euler == telesym;
    if (!lvl.telescoping_plain || !lvl.telescoping_sym) rep.pass = false;
    rep.levels.push_back(std::move(lvl));
  }
  return rep;
}

AdditivityReport additivity_probe(const Inclusion& f, int nmax) {
  if (nmax < 1) throw std::invalid_argument("additivity_probe: nmax must be >= 1");
  AdditivityReport rep;
  rep.nmax = nmax;
  const PointedSimplicialSet& x = f.map.source;
  const PointedSimplicialSet& y = f.map.target;
  PointedSimplicialSet z = quotient_by_subobject(f).quotient;
  for (int n = 1; n <= nmax; ++n) {
    AdditivityRow row;
    row.n = n;
    row.x_acyclic = acyclic_space(sym_power(n, x));
    row.z_acyclic = acyclic_space(sym_power(n, z));
    row.y_acyclic = acyclic_space(sym_power(n, y));
    rep.rows.push_back(row);
  }
  auto threshold = [&](auto pick) -> std::optional<int> {
    for (int a = 1; a <= nmax; ++a) {
      bool all = true;
      for (int j = a; j <= nmax; ++j)
        if (!pick(rep.rows[static_cast<std::size_t>(j) - 1])) all = false;
      if (all) return a;
    }
    return std::nullopt;
  };
  rep.a = threshold([](const AdditivityRow& r) { return r.x_acyclic; });
  rep.b = threshold([](const AdditivityRow& r) { return r.z_acyclic; });
  if (rep.a && rep.b && *rep.a + *rep.b - 1 <= nmax) {
    rep.implication_checked = true;
    for (int n = *rep.a + *rep.b - 1; n <= nmax; ++n)
      if (!rep.rows[static_cast<std::size_t>(n) - 1].y_acyclic) rep.implication_ok = false;
  }
  return rep;
}

PointedSimplicialSet simplicial_complex_space(const std::vector<std::vector<int>>& faces,
                                              int dim_bound) {
  // downward closure
  std::set<std::vector<int>> closed;
  auto add_face = [&](auto&& self, std::vector<int> f) -> void {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty() || closed.count(f)) return;
    closed.insert(f);
    if (f.size() > 1)
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t k = 0; k < f.size(); ++k)
          if (k != drop) sub.push_back(f[k]);
        self(self, std::move(sub));
      }
  };
  for (const auto& f : faces) add_face(add_face, f);

  int maxdim = -1;
  for (const auto& f : closed) maxdim = std::max(maxdim, static_cast<int>(f.size()) - 1);

  PointedSimplicialSet::Raw raw;
  raw.dim_bound = dim_bound;
  raw.claimed_geom_bound = maxdim;
  raw.ids.resize(static_cast<std::size_t>(dim_bound) + 1);
  raw.faces.resize(static_cast<std::size_t>(dim_bound) + 1);
  raw.degens.resize(static_cast<std::size_t>(dim_bound) + 1);

  std::vector<std::vector<std::string>> seqs(static_cast<std::size_t>(dim_bound) + 1);
  std::vector<std::map<std::string, std::uint32_t>> index(static_cast<std::size_t>(dim_bound) + 1);
  std::vector<int> verts;
  for (const auto& f : closed)
    if (f.size() == 1) verts.push_back(f[0]);
  for (int m = 0; m <= dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    std::string cur;
    auto rec = [&](auto&& self, std::size_t vi) -> void {
      if (static_cast<int>(cur.size()) == m + 1) {
        std::vector<int> support;
        for (char c : cur) support.push_back(c - '0');
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        if (closed.count(support)) seqs[mi].push_back(cur);
        return;
      }
      for (std::size_t j = vi; j < verts.size(); ++j) {
        cur += static_cast<char>('0' + verts[j]);
        self(self, j);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    raw.ids[mi].push_back("*");
    for (std::uint32_t k = 0; k < seqs[mi].size(); ++k) {
      index[mi][seqs[mi][k]] = k + 1;
      raw.ids[mi].push_back(seqs[mi][k]);
    }
  }
  for (int m = 1; m <= dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.faces[mi].assign(static_cast<std::size_t>(m) + 1,
                         std::vector<std::uint32_t>(seqs[mi].size() + 1, 0));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t k = 0; k < seqs[mi].size(); ++k) {
        std::string t = seqs[mi][k];
        t.erase(static_cast<std::size_t>(i), 1);
        raw.faces[mi][static_cast<std::size_t>(i)][k + 1] = index[mi - 1].at(t);
      }
  }
  for (int m = 0; m < dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.degens[mi].assign(static_cast<std::size_t>(m) + 1,
                          std::vector<std::uint32_t>(seqs[mi].size() + 1, 0));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t k = 0; k < seqs[mi].size(); ++k) {
        std::string t = seqs[mi][k];
        t.insert(static_cast<std::size_t>(i), 1, t[static_cast<std::size_t>(i)]);
        raw.degens[mi][static_cast<std::size_t>(i)][k + 1] = index[mi + 1].at(t);
      }
  }
  return PointedSimplicialSet::finalize(std::move(raw)).sset;
}

Inclusion random_inclusion(std::mt19937_64& rng) {
  auto coin = [&](int num, int den) { return static_cast<int>(rng() % static_cast<unsigned>(den)) < num; };
  while (true) {
    int v = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> yfaces;
    for (int a = 0; a < v; ++a) yfaces.push_back({a});
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b)
        if (coin(1, 2)) {
          edges.push_back({a, b});
          yfaces.push_back({a, b});
        }
    bool tri = v == 3 && edges.size() == 3 && coin(1, 2);
    if (tri) yfaces.push_back({0, 1, 2});
    // levels <= 2 carry at most 8 non-base simplices
    std::size_t lvl2 = static_cast<std::size_t>(v) + 2 * edges.size() + (tri ? 1 : 0);
    if (lvl2 > 8) continue;

    // random downward-closed subcomplex
    std::vector<std::vector<int>> xfaces;
    std::vector<bool> vkeep(static_cast<std::size_t>(v), false);
    for (int a = 0; a < v; ++a)
      if (coin(3, 4)) {
        vkeep[static_cast<std::size_t>(a)] = true;
        xfaces.push_back({a});
      }
    std::set<std::pair<int, int>> ekeep;
    for (auto [a, b] : edges)
      if (vkeep[static_cast<std::size_t>(a)] && vkeep[static_cast<std::size_t>(b)] && coin(1, 2)) {
        ekeep.insert({a, b});
        xfaces.push_back({a, b});
      }
    if (tri && ekeep.size() == 3 && coin(1, 2)) xfaces.push_back({0, 1, 2});

    PointedSimplicialSet y = simplicial_complex_space(yfaces, 3);
    PointedSimplicialSet x = simplicial_complex_space(xfaces, 3);
    SimplicialMap m;
    m.source = x;
    m.target = y;
    m.comp.resize(4);
    for (int lvl = 0; lvl <= 3; ++lvl) {
      auto& row = m.comp[static_cast<std::size_t>(lvl)];
      row.resize(x.size(lvl));
      for (std::uint32_t k = 0; k < x.size(lvl); ++k)
        row[k] = y.index_of(lvl, x.id(lvl, k));
    }
    return Inclusion(std::move(m));
  }
}

}  // namespace sympow
