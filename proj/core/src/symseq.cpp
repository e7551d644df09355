#include "sympow/symseq.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sympow/codec.hpp"

namespace sympow {

namespace {

using Tuple = std::vector<std::uint32_t>;

GSet point_gset(const PermGroup& g) { return trivial_gset(g, make_pointed_set({})); }

std::string tuple_of_ids(const PointedSet& s, const Tuple& t) {
  std::vector<std::string> parts;
  parts.reserve(t.size());
  for (auto k : t) parts.push_back(s.ids[k]);
  return encode_tuple(parts);
}

void enumerate_tuples(const PointedSet& s, int len, std::vector<Tuple>& out) {
  std::vector<std::uint32_t> nonbase;
  for (std::uint32_t k = 0; k < s.size(); ++k)
    if (k != s.base) nonbase.push_back(k);
  Tuple cur(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (auto k : nonbase) {
      cur[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1);
    }
  };
  if (len == 0)
    out.push_back({});
  else if (!nonbase.empty())
    rec(rec, 0);
}

Perm sub_perm(const Perm& h, int offset, int len) {
  Perm p(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k)
    p[static_cast<std::size_t>(k)] =
        static_cast<std::uint8_t>(h[static_cast<std::size_t>(offset + k)] - offset);
  return p;
}

}  // namespace

void SymmetricSequence::validate() const {
  if (static_cast<int>(levels.size()) != max_degree + 1)
    throw std::logic_error("SymmetricSequence: level count");
  for (int m = 0; m <= max_degree; ++m) {
    if (levels[static_cast<std::size_t>(m)].group.degree() != m)
      throw std::logic_error("SymmetricSequence: level group degree");
    if (levels[static_cast<std::size_t>(m)].group.order() !=
        symmetric_group(m).order())
      throw std::logic_error("SymmetricSequence: level group is not the full symmetric group");
    levels[static_cast<std::size_t>(m)].validate();
  }
}

SymmetricSequence unit_sequence(int max_degree) {
  if (max_degree < 0 || max_degree > kMaxSeqDegree)
    throw std::invalid_argument("unit_sequence: degree over cap");
  SymmetricSequence s;
  s.max_degree = max_degree;
  for (int m = 0; m <= max_degree; ++m) {
    PermGroup g = symmetric_group(m);
    if (m == 0)
      s.levels.push_back(trivial_gset(g, make_pointed_set({"()"})));
    else
      s.levels.push_back(point_gset(g));
  }
  return s;
}

SymmetricSequence free_monoid(const PointedSet& t, int max_degree) {
  if (max_degree < 0 || max_degree > kMaxSeqDegree)
    throw std::invalid_argument("free_monoid: degree over cap");
  SymmetricSequence s;
  s.max_degree = max_degree;
  for (int m = 0; m <= max_degree; ++m) {
    PermGroup g = symmetric_group(m);
    std::vector<Tuple> tuples;
    enumerate_tuples(t, m, tuples);
    std::vector<std::string> ids;
    ids.reserve(tuples.size());
    for (const auto& tp : tuples) ids.push_back(tuple_of_ids(t, tp));
    PointedSet carrier = make_pointed_set(ids, "*");
    std::map<std::string, Tuple> by_id;
    for (const auto& tp : tuples) by_id[tuple_of_ids(t, tp)] = tp;
    GSet gs{g, carrier, {}};
    gs.action.resize(g.order());
    for (std::size_t e = 0; e < g.order(); ++e) {
      auto& row = gs.action[e];
      row.resize(carrier.size());
      row[carrier.base] = carrier.base;
      for (std::uint32_t c = 0; c < carrier.size(); ++c) {
        if (c == carrier.base) continue;
        Tuple moved = perm_apply(g.elements()[e], by_id.at(carrier.ids[c]));
        row[c] = carrier.index_of(tuple_of_ids(t, moved));
      }
    }
    s.levels.push_back(std::move(gs));
  }
  return s;
}

SeqSmash seq_smash_detailed(const SymmetricSequence& x, const SymmetricSequence& y) {
  if (x.max_degree != y.max_degree)
    throw std::invalid_argument("seq_smash: max_degree mismatch");
  const int M = x.max_degree;
  SeqSmash out;
  out.seq.max_degree = M;
  out.details.resize(static_cast<std::size_t>(M) + 1);
  for (int n = 0; n <= M; ++n) {
    PermGroup g = symmetric_group(n);
    SeqSmashLevel lvl;
    std::vector<std::string> combined_ids;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> combined_origin;  // summand, class
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      const GSet& xi = x.levels[static_cast<std::size_t>(i)];
      const GSet& yj = y.levels[static_cast<std::size_t>(j)];
      if (xi.carrier.reduced_size() == 0 || yj.carrier.reduced_size() == 0) continue;
      SeqSmashSummand sm;
      sm.i = i;
      sm.j = j;
      // W = X_i ∧ Y_j
      std::vector<std::string> ids;
      for (std::uint32_t a = 0; a < xi.carrier.size(); ++a) {
        if (a == xi.carrier.base) continue;
        for (std::uint32_t b = 0; b < yj.carrier.size(); ++b) {
          if (b == yj.carrier.base) continue;
          ids.push_back(encode_pair(xi.carrier.ids[a], yj.carrier.ids[b]));
        }
      }
      PointedSet w = make_pointed_set(ids, "*");
      sm.wpayload.resize(w.size());
      for (std::uint32_t a = 0; a < xi.carrier.size(); ++a) {
        if (a == xi.carrier.base) continue;
        for (std::uint32_t b = 0; b < yj.carrier.size(); ++b) {
          if (b == yj.carrier.base) continue;
          std::uint32_t idx = w.index_of(encode_pair(xi.carrier.ids[a], yj.carrier.ids[b]));
          sm.wpayload[idx] = {a, b};
          sm.windex[{a, b}] = idx;
        }
      }
      sm.wpayload[w.base] = {xi.carrier.base, yj.carrier.base};
      EmbeddingSpec young = EmbeddingSpec::young(i, j);
      PermGroup h = young.realize();
      GSet wset{h, w, {}};
      wset.action.resize(h.order());
      for (std::size_t e = 0; e < h.order(); ++e) {
        const Perm& p = h.elements()[e];
        Perm alpha = sub_perm(p, 0, i);
        Perm beta = sub_perm(p, i, j);
        std::size_t ai = xi.group.index_of(alpha);
        std::size_t bi = yj.group.index_of(beta);
        auto& row = wset.action[e];
        row.resize(w.size());
        row[w.base] = w.base;
        for (std::uint32_t c = 0; c < w.size(); ++c) {
          if (c == w.base) continue;
          auto [a, b] = sm.wpayload[c];
          row[c] = sm.windex.at({xi.action[ai][a], yj.action[bi][b]});
        }
      }
      sm.cor = cor_with_witness(g, young, wset);
      std::uint32_t spos = static_cast<std::uint32_t>(lvl.summands.size());
      std::string prefix = std::to_string(i) + "+" + std::to_string(j) + ":";
      for (std::uint32_t c = 0; c < sm.cor.gset.carrier.size(); ++c) {
        if (c == sm.cor.gset.carrier.base) continue;
        combined_ids.push_back(prefix + sm.cor.gset.carrier.ids[c]);
        combined_origin.push_back({spos, c});
      }
      lvl.summands.push_back(std::move(sm));
    }
    PointedSet carrier = make_pointed_set(combined_ids, "*");
    // map (summand, class) -> combined index
    std::vector<std::vector<std::uint32_t>> to_combined(lvl.summands.size());
    for (std::uint32_t s = 0; s < lvl.summands.size(); ++s)
      to_combined[s].assign(lvl.summands[s].cor.gset.carrier.size(), carrier.base);
    lvl.origin.assign(carrier.size(), {UINT32_MAX, UINT32_MAX});
    for (std::size_t k = 0; k < combined_ids.size(); ++k) {
      std::uint32_t ci = carrier.index_of(combined_ids[k]);
      auto [spos, cls] = combined_origin[k];
      to_combined[spos][cls] = ci;
      lvl.origin[ci] = {spos, cls};
    }
    GSet level{g, carrier, {}};
    level.action.resize(g.order());
    for (std::size_t e = 0; e < g.order(); ++e) {
      auto& row = level.action[e];
      row.resize(carrier.size());
      row[carrier.base] = carrier.base;
      for (std::uint32_t c = 0; c < carrier.size(); ++c) {
        if (c == carrier.base) continue;
        auto [spos, cls] = lvl.origin[c];
        row[c] = to_combined[spos][lvl.summands[spos].cor.gset.act(e, cls)];
      }
    }
    out.seq.levels.push_back(std::move(level));
    out.details[static_cast<std::size_t>(n)] = std::move(lvl);
  }
  out.seq.validate();
  return out;
}

SymmetricSequence seq_smash(const SymmetricSequence& x, const SymmetricSequence& y) {
  return seq_smash_detailed(x, y).seq;
}

void certify_seq_smash_commutes(const SymmetricSequence& x, const SymmetricSequence& y) {
  SeqSmash xy = seq_smash_detailed(x, y);
  SeqSmash yx = seq_smash_detailed(y, x);
  for (int n = 0; n <= x.max_degree; ++n) {
    auto ni = static_cast<std::size_t>(n);
    const GSet& a = xy.seq.levels[ni];
    const GSet& b = yx.seq.levels[ni];
    PermGroup g = symmetric_group(n);
    std::vector<std::uint32_t> f(a.carrier.size(), b.carrier.base);
    for (std::uint32_t c = 0; c < a.carrier.size(); ++c) {
      if (c == a.carrier.base) continue;
      auto [spos, cls] = xy.details[ni].origin[c];
      const SeqSmashSummand& sm = xy.details[ni].summands[spos];
      auto [g0, widx] = sm.cor.rep[cls];
      auto [xi, yj] = sm.wpayload[widx];
      // the twist: (g, (x, y)) -> (g·χ, (y, x)) with χ the block swap
      Perm chi = perm_block_rearrange({1, 0}, {sm.j, sm.i});
      Perm g2 = perm_compose(g.elements()[g0], chi);
      // locate the (j, i) summand on the other side
      const SeqSmashLevel& other = yx.details[ni];
      std::uint32_t opos = UINT32_MAX;
      for (std::uint32_t s = 0; s < other.summands.size(); ++s)
        if (other.summands[s].i == sm.j && other.summands[s].j == sm.i) opos = s;
      if (opos == UINT32_MAX) throw std::logic_error("twist: missing mirror summand");
      const SeqSmashSummand& om = other.summands[opos];
      std::uint32_t w2 = om.windex.at({yj, xi});
      std::uint32_t cls2 = om.cor.class_of(g.index_of(g2), w2);
      std::string id2 = std::to_string(om.i) + "+" + std::to_string(om.j) + ":" +
                        om.cor.gset.carrier.ids[cls2];
      f[c] = b.carrier.index_of(id2);
    }
    if (!verify_equivariant_bijection(a, b, f))
      throw std::logic_error("twist: not an equivariant bijection at degree " + std::to_string(n));
  }
}

SymmetricSequence free_spectrum(const FreeSpectrumSpec& spec, int max_degree) {
  if (spec.n < 0 || spec.n > max_degree)
    throw std::invalid_argument("free_spectrum: need 0 <= n <= max_degree");
  SymmetricSequence naive;
  naive.max_degree = max_degree;
  for (int m = 0; m <= max_degree; ++m) {
    PermGroup g = symmetric_group(m);
    if (m == spec.n) {
      // F~_n(A) at its own degree: Σ_n × A, induced from the trivial subgroup
      GSet a_triv = trivial_gset(EmbeddingSpec::tail(m, 0).realize(), spec.a);
      naive.levels.push_back(cor(g, EmbeddingSpec::tail(m, 0), a_triv));
    } else {
      naive.levels.push_back(point_gset(g));
    }
  }
  return seq_smash(naive, free_monoid(spec.t, max_degree));
}

namespace {

// cor^{Σ_m}_{Σ_J tail}(A^{∧p} ∧ T^{∧J}) with explicit payloads (p a-coordinates,
// J t-coordinates); p = 1 gives the plain closed slice formula.
struct ClosedSlice {
  CorSet cor;
  std::vector<std::pair<Tuple, Tuple>> wpayload;
  std::map<std::pair<Tuple, Tuple>, std::uint32_t> windex;
  PointedSet w;
};

ClosedSlice closed_slice(const PointedSet& a, const PointedSet& t, int p, int m, int tail_len) {
  ClosedSlice cs;
  std::vector<Tuple> at, tt;
  enumerate_tuples(a, p, at);
  enumerate_tuples(t, tail_len, tt);
  std::vector<std::string> ids;
  for (const auto& ta : at)
    for (const auto& tb : tt)
      ids.push_back(encode_pair(p == 1 ? a.ids[ta[0]] : tuple_of_ids(a, ta),
                                tuple_of_ids(t, tb)));
  cs.w = make_pointed_set(ids, "*");
  cs.wpayload.resize(cs.w.size());
  for (const auto& ta : at)
    for (const auto& tb : tt) {
      std::uint32_t idx = cs.w.index_of(encode_pair(
          p == 1 ? a.ids[ta[0]] : tuple_of_ids(a, ta), tuple_of_ids(t, tb)));
      cs.wpayload[idx] = {ta, tb};
      cs.windex[{ta, tb}] = idx;
    }
  EmbeddingSpec tail = EmbeddingSpec::tail(m, tail_len);
  PermGroup h = tail.realize();
  GSet wset{h, cs.w, {}};
  wset.action.resize(h.order());
  for (std::size_t e = 0; e < h.order(); ++e) {
    const Perm& hp = h.elements()[e];
    Perm tau = sub_perm(hp, m - tail_len, tail_len);
    auto& row = wset.action[e];
    row.resize(cs.w.size());
    row[cs.w.base] = cs.w.base;
    for (std::uint32_t c = 0; c < cs.w.size(); ++c) {
      if (c == cs.w.base) continue;
      const auto& [ta, tb] = cs.wpayload[c];
      row[c] = cs.windex.at({ta, perm_apply(tau, tb)});
    }
  }
  cs.cor = cor_with_witness(symmetric_group(m), tail, wset);
  return cs;
}

}  // namespace

SliceCertificate slice_check(const FreeSpectrumSpec& spec, int m) {
  if (m > 6) throw std::invalid_argument("slice_check: m over cap");
  if (spec.a.reduced_size() > 3 || spec.t.reduced_size() > 3)
    throw std::invalid_argument("slice_check: carrier over cap");
  if (m < spec.n) throw std::invalid_argument("slice_check: need m >= n");
  SliceCertificate cert;
  cert.n = spec.n;
  cert.m = m;
  cert.definitional = free_spectrum(spec, m).levels[static_cast<std::size_t>(m)];
  ClosedSlice cs = closed_slice(spec.a, spec.t, 1, m, m - spec.n);
  cert.closed = cs.cor.gset;

  unsigned long expect = 1;
  for (int k = m - spec.n + 1; k <= m; ++k) expect *= static_cast<unsigned long>(k);
  unsigned long tpow = 1;
  for (int k = 0; k < m - spec.n; ++k) tpow *= spec.t.reduced_size();
  expect *= spec.a.reduced_size() * tpow;
  cert.size_law_ok = cert.definitional.carrier.reduced_size() == expect &&
                     cert.closed.carrier.reduced_size() == expect;

  auto f = find_equivariant_bijection(cert.definitional, cert.closed);
  if (!f)
    throw std::logic_error("slice_check: no equivariant bijection at (n=" +
                           std::to_string(spec.n) + ", m=" + std::to_string(m) + ")");
  cert.bijection = *f;
  cert.pass = cert.size_law_ok &&
              verify_equivariant_bijection(cert.definitional, cert.closed, cert.bijection);
  return cert;
}

SymSliceCertificate sym_slice_check(int p, const FreeSpectrumSpec& spec, int m) {
  if (p < 1 || p > 3) throw std::invalid_argument("sym_slice_check: p over cap");
  if (m < p * spec.n) throw std::invalid_argument("sym_slice_check: need m >= p*n");
  SymSliceCertificate cert;
  cert.p = p;
  cert.n = spec.n;
  cert.m = m;

  // the m-slice of F_n(A)^∧p is the slice of F_{pn}(A^∧p); certify it against
  // the seq_smash machinery first
  std::vector<std::string> apow_ids;
  {
    std::vector<Tuple> at;
    enumerate_tuples(spec.a, p, at);
    for (const auto& ta : at) apow_ids.push_back(tuple_of_ids(spec.a, ta));
  }
  FreeSpectrumSpec power_spec{p * spec.n, make_pointed_set(apow_ids, "*"), spec.t};
  cert.power_slice = slice_check(power_spec, m);

  const int J = m - p * spec.n;
  ClosedSlice ps = closed_slice(spec.a, spec.t, p, m, J);
  PermGroup g = symmetric_group(m);

  // Σ_p acts on the power slice: τ·[(g0, (a, t))] = [(g0·emb(τ)^{-1}, (τa, t))],
  // emb the p-shuffle on the first p blocks of size n
  auto sigma_p = symmetric_group(p);
  std::vector<std::vector<std::uint32_t>> tau_action;
  for (std::size_t ti : sigma_p.generator_indices()) {
    const Perm& tau = sigma_p.elements()[ti];
    Perm emb = perm_identity(m);
    if (spec.n > 0) {
      Perm blocks = perm_block_rearrange(tau, std::vector<int>(static_cast<std::size_t>(p), spec.n));
      for (std::size_t k = 0; k < blocks.size(); ++k) emb[k] = blocks[k];
    }
    Perm emb_inv = perm_inverse(emb);
    std::vector<std::uint32_t> row(ps.cor.gset.carrier.size());
    row[ps.cor.gset.carrier.base] = ps.cor.gset.carrier.base;
    for (std::uint32_t c = 0; c < ps.cor.gset.carrier.size(); ++c) {
      if (c == ps.cor.gset.carrier.base) continue;
      auto [g0, widx] = ps.cor.rep[c];
      const auto& [ta, tb] = ps.wpayload[widx];
      Tuple ta2 = perm_apply(tau, ta);
      Perm g2 = perm_compose(g.elements()[g0], emb_inv);
      row[c] = ps.cor.class_of(g.index_of(g2), ps.windex.at({ta2, tb}));
    }
    tau_action.push_back(std::move(row));
  }

  // orbit quotient of the power slice under the Σ_p action
  const PointedSet& pc = ps.cor.gset.carrier;
  std::vector<std::uint32_t> rep_of(pc.size());
  std::vector<std::vector<std::uint32_t>> orbits;
  {
    std::vector<bool> done(pc.size(), false);
    for (std::uint32_t c = 0; c < pc.size(); ++c) {
      if (done[c]) continue;
      std::vector<std::uint32_t> orb{c};
      done[c] = true;
      for (std::size_t q = 0; q < orb.size(); ++q)
        for (const auto& row : tau_action) {
          std::uint32_t nxt = row[orb[q]];
          if (!done[nxt]) {
            done[nxt] = true;
            orb.push_back(nxt);
          }
        }
      std::sort(orb.begin(), orb.end());
      std::uint32_t best = orb.front();
      for (auto v : orb)
        if (pc.ids[v] < pc.ids[best]) best = v;
      for (auto v : orb) rep_of[v] = best;
      orbits.push_back(std::move(orb));
    }
  }
  std::vector<std::string> dir_ids;
  for (const auto& orb : orbits) {
    std::uint32_t r = rep_of[orb.front()];
    if (r != rep_of[pc.base]) dir_ids.push_back(pc.ids[r]);
  }
  PointedSet dir_carrier = make_pointed_set(dir_ids, pc.ids[rep_of[pc.base]]);
  std::vector<std::uint32_t> proj(pc.size());
  for (std::uint32_t c = 0; c < pc.size(); ++c)
    proj[c] = dir_carrier.index_of(pc.ids[rep_of[c]]);
  GSet direct{g, dir_carrier, {}};
  direct.action.resize(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    auto& row = direct.action[e];
    row.assign(dir_carrier.size(), dir_carrier.base);
    for (std::uint32_t c = 0; c < pc.size(); ++c) {
      std::uint32_t img = proj[ps.cor.gset.act(e, c)];
      if (rep_of[c] == c) row[proj[c]] = img;
    }
    // well-definedness of the descended action
    for (std::uint32_t c = 0; c < pc.size(); ++c)
      if (row[proj[c]] != proj[ps.cor.gset.act(e, c)])
        throw std::logic_error("sym_slice_check: Σ_m action does not descend");
  }
  cert.direct = direct;

  // closed side: one cor over the joint subgroup
  EmbeddingSpec joint = EmbeddingSpec::joint(
      {EmbeddingSpec::block_shuffle(p, spec.n), EmbeddingSpec::tail(m, J)});
  PermGroup h = joint.realize();
  GSet wset{h, ps.w, {}};
  wset.action.resize(h.order());
  for (std::size_t e = 0; e < h.order(); ++e) {
    const Perm& hp = h.elements()[e];
    // split into the block-shuffle part and the tail part
    Perm tau(static_cast<std::size_t>(p));
    for (int b = 0; b < p; ++b) {
      int img = spec.n > 0 ? hp[static_cast<std::size_t>(b * spec.n)] / spec.n : b;
      tau[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(img);
      if (spec.n > 0)
        for (int k = 0; k < spec.n; ++k)
          if (hp[static_cast<std::size_t>(b * spec.n + k)] !=
              static_cast<std::uint8_t>(img * spec.n + k))
            throw std::logic_error("sym_slice_check: joint element is not block-structured");
    }
    Perm sig = sub_perm(hp, p * spec.n, J);
    auto& row = wset.action[e];
    row.resize(ps.w.size());
    row[ps.w.base] = ps.w.base;
    for (std::uint32_t c = 0; c < ps.w.size(); ++c) {
      if (c == ps.w.base) continue;
      const auto& [ta, tb] = ps.wpayload[c];
      row[c] = ps.windex.at({perm_apply(tau, ta), perm_apply(sig, tb)});
    }
  }
  cert.closed = cor(g, joint, wset);

  auto f = find_equivariant_bijection(cert.direct, cert.closed);
  if (!f) throw std::logic_error("sym_slice_check: no equivariant bijection");
  cert.bijection = *f;

  // fibers of the quotient map are exactly the Σ_p-orbits, and they cover
  cert.fibers_ok = true;
  std::size_t covered = 0;
  for (const auto& orb : orbits) {
    covered += orb.size();
    for (auto v : orb)
      if (rep_of[v] != rep_of[orb.front()]) cert.fibers_ok = false;
  }
  if (covered != pc.size()) cert.fibers_ok = false;
  // distinct orbits map to distinct direct elements
  std::set<std::uint32_t> classes;
  for (const auto& orb : orbits) classes.insert(proj[orb.front()]);
  if (classes.size() != orbits.size()) cert.fibers_ok = false;

  cert.pass = cert.power_slice.pass && cert.fibers_ok &&
              verify_equivariant_bijection(cert.direct, cert.closed, cert.bijection);
  return cert;
}

}  // namespace sympow
