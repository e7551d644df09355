#include "sympow/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sympow {

std::uint32_t PointedSet::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) throw std::invalid_argument("PointedSet: unknown id " + id);
  return static_cast<std::uint32_t>(it - ids.begin());
}

PointedSet make_pointed_set(std::vector<std::string> nonbase_ids, const std::string& base_id) {
  PointedSet s;
  s.ids = std::move(nonbase_ids);
  s.ids.push_back(base_id);
  std::sort(s.ids.begin(), s.ids.end());
  if (std::adjacent_find(s.ids.begin(), s.ids.end()) != s.ids.end())
    throw std::invalid_argument("PointedSet: duplicate ids");
  s.base = s.index_of(base_id);
  return s;
}

void GSet::validate() const {
  const std::size_t n = carrier.size();
  if (action.size() != group.order()) throw std::logic_error("GSet: action table size mismatch");
  for (const auto& row : action) {
    if (row.size() != n) throw std::logic_error("GSet: action row size mismatch");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n || seen[v]) throw std::logic_error("GSet: action row not a bijection");
      seen[v] = true;
    }
  }
  const auto& id_row = action[group.identity_index()];
  for (std::uint32_t x = 0; x < n; ++x)
    if (id_row[x] != x) throw std::logic_error("GSet: identity does not act as identity");
  for (const auto& row : action)
    if (row[carrier.base] != carrier.base) throw std::logic_error("GSet: basepoint not fixed");
  // act(s)∘act(h) = act(s*h) for generators s: enough, every element is a word in them
  for (std::size_t s : group.generator_indices()) {
    for (std::size_t h = 0; h < group.order(); ++h) {
      std::size_t sh = group.compose(s, h);
      for (std::uint32_t x = 0; x < n; ++x)
        if (action[s][action[h][x]] != action[sh][x])
          throw std::logic_error("GSet: action not associative");
    }
  }
}

std::vector<std::uint32_t> GSet::orbit_of(std::uint32_t x) const {
  std::vector<std::uint32_t> orb;
  std::vector<bool> seen(carrier.size(), false);
  std::vector<std::uint32_t> work{x};
  seen[x] = true;
  while (!work.empty()) {
    std::uint32_t cur = work.back();
    work.pop_back();
    orb.push_back(cur);
    for (std::size_t g : group.generator_indices()) {
      std::uint32_t nxt = action[g][cur];
      if (!seen[nxt]) {
        seen[nxt] = true;
        work.push_back(nxt);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::size_t> GSet::stabilizer_of(std::uint32_t x) const {
  std::vector<std::size_t> st;
  for (std::size_t g = 0; g < group.order(); ++g)
    if (action[g][x] == x) st.push_back(g);
  return st;
}

GSet trivial_gset(const PermGroup& g, const PointedSet& carrier) {
  GSet s{g, carrier, {}};
  std::vector<std::uint32_t> row(carrier.size());
  std::iota(row.begin(), row.end(), 0u);
  s.action.assign(g.order(), row);
  return s;
}

OrbitQuotient orbit_quotient(const GSet& a) {
  const std::size_t n = a.carrier.size();
  std::vector<std::uint32_t> rep_of(n);
  std::vector<bool> done(n, false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    auto orb = a.orbit_of(x);
    // lexicographically minimal id in the orbit
    std::uint32_t best = orb.front();
    for (auto y : orb)
      if (a.carrier.ids[y] < a.carrier.ids[best]) best = y;
    for (auto y : orb) {
      done[y] = true;
      rep_of[y] = best;
    }
    reps.push_back(best);
  }
  // canonical pointed set of representative ids
  std::vector<std::string> ids;
  for (auto r : reps)
    if (r != rep_of[a.carrier.base]) ids.push_back(a.carrier.ids[r]);
  OrbitQuotient q;
  q.orbits = make_pointed_set(std::move(ids), a.carrier.ids[rep_of[a.carrier.base]]);
  q.projection.resize(n);
  for (std::uint32_t x = 0; x < n; ++x)
    q.projection[x] = q.orbits.index_of(a.carrier.ids[rep_of[x]]);
  q.representative.resize(q.orbits.size());
  for (std::uint32_t x = 0; x < n; ++x)
    if (rep_of[x] == x) q.representative[q.projection[x]] = x;
  return q;
}

std::uint32_t CorSet::class_of(std::size_t g, std::uint32_t x) const {
  return class_table_[g * carrier_size_ + x];
}

CorSet cor_with_witness(const PermGroup& g, const EmbeddingSpec& h, const GSet& x) {
  PermGroup hg = h.realize();
  if (hg.degree() != g.degree() || !hg.is_subgroup_of(g))
    throw std::invalid_argument("cor: embedding not a subgroup of the ambient group");
  if (!x.group.same_elements(hg))
    throw std::invalid_argument("cor: X is not a GSet over the embedded subgroup");

  const std::size_t nx = x.carrier.size();
  const std::size_t ng = g.order();
  // H-orbit of (g0, x0): h.(g0, x0) = (g0 h^{-1}, h x0)
  std::vector<std::uint32_t> cls(ng * nx, UINT32_MAX);
  std::vector<std::pair<std::size_t, std::uint32_t>> reps;
  // basepoint class first: all (g0, base) collapse (pointed coproduct)
  for (std::size_t g0 = 0; g0 < ng; ++g0) cls[g0 * nx + x.carrier.base] = 0;
  reps.push_back({g.identity_index(), x.carrier.base});

  std::vector<std::size_t> h_in_g(hg.order());
  for (std::size_t i = 0; i < hg.order(); ++i) h_in_g[i] = g.index_of(hg.elements()[i]);

  for (std::size_t g0 = 0; g0 < ng; ++g0) {
    for (std::uint32_t x0 = 0; x0 < nx; ++x0) {
      if (cls[g0 * nx + x0] != UINT32_MAX) continue;
      // enumerate the H-orbit, find the canonical (minimal) member
      std::pair<std::size_t, std::uint32_t> best{g0, x0};
      std::vector<std::pair<std::size_t, std::uint32_t>> members;
      for (std::size_t hi = 0; hi < hg.order(); ++hi) {
        std::size_t g1 = g.compose(g0, g.inverse_index(h_in_g[hi]));
        std::uint32_t x1 = x.action[hi][x0];
        members.push_back({g1, x1});
        if (std::make_pair(g1, x1) < best) best = {g1, x1};
      }
      auto id = static_cast<std::uint32_t>(reps.size());
      reps.push_back(best);
      for (auto& m : members) cls[m.first * nx + m.second] = id;
    }
  }

  // canonical ids and the sorted carrier
  std::vector<std::string> ids;
  for (std::size_t i = 1; i < reps.size(); ++i)
    ids.push_back("(" + perm_one_line(g.elements()[reps[i].first]) + "|" +
                  x.carrier.ids[reps[i].second] + ")");
  PointedSet carrier = make_pointed_set(std::move(ids), "*");

  // map provisional class id -> sorted carrier index
  std::vector<std::uint32_t> to_sorted(reps.size());
  to_sorted[0] = carrier.base;
  for (std::size_t i = 1; i < reps.size(); ++i)
    to_sorted[i] = carrier.index_of("(" + perm_one_line(g.elements()[reps[i].first]) + "|" +
                                    x.carrier.ids[reps[i].second] + ")");

  CorSet out;
  out.carrier_size_ = nx;
  out.class_table_.assign(ng * nx, 0);
  for (std::size_t k = 0; k < ng * nx; ++k) out.class_table_[k] = to_sorted[cls[k]];
  out.rep.resize(carrier.size());
  for (std::size_t i = 0; i < reps.size(); ++i) out.rep[to_sorted[i]] = reps[i];

  // left G-action on classes: g'.[(g0, x0)] = [(g' g0, x0)]
  std::vector<std::vector<std::uint32_t>> action(ng, std::vector<std::uint32_t>(carrier.size()));
  for (std::size_t gp = 0; gp < ng; ++gp) {
    for (std::uint32_t c = 0; c < carrier.size(); ++c) {
      auto [g0, x0] = out.rep[c];
      action[gp][c] = out.class_table_[g.compose(gp, g0) * nx + x0];
    }
  }
  out.gset = GSet{g, std::move(carrier), std::move(action)};

  // size law: reduced size = [G:H] * reduced(X)
  if (out.gset.carrier.reduced_size() != (ng / hg.order()) * x.carrier.reduced_size())
    throw std::logic_error("cor: reduced size law violated");
  return out;
}

GSet cor(const PermGroup& g, const EmbeddingSpec& h, const GSet& x) {
  return cor_with_witness(g, h, x).gset;
}

GSet res(const PermGroup& g, const EmbeddingSpec& h, const GSet& y) {
  PermGroup hg = h.realize();
  if (hg.degree() != g.degree() || !hg.is_subgroup_of(g))
    throw std::invalid_argument("res: embedding not a subgroup of the ambient group");
  if (!y.group.same_elements(g)) throw std::invalid_argument("res: Y is not a GSet over G");
  GSet out{hg, y.carrier, {}};
  out.action.reserve(hg.order());
  for (const auto& e : hg.elements()) out.action.push_back(y.action[g.index_of(e)]);
  return out;
}

namespace {

// is sub ⊆ sup for sorted index vectors
bool sorted_subset(const std::vector<std::size_t>& sub, const std::vector<std::size_t>& sup) {
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

struct OrbitData {
  std::vector<std::uint32_t> members;  // sorted
  std::uint32_t rep;                   // lex-min id
  std::vector<std::size_t> rep_stab;
};

std::vector<OrbitData> orbit_data(const GSet& a, bool include_base) {
  std::vector<OrbitData> out;
  std::vector<bool> done(a.carrier.size(), false);
  for (std::uint32_t x = 0; x < a.carrier.size(); ++x) {
    if (done[x]) continue;
    if (!include_base && x == a.carrier.base) {
      done[x] = true;
      continue;
    }
    OrbitData d;
    d.members = a.orbit_of(x);
    if (!include_base &&
        std::binary_search(d.members.begin(), d.members.end(), a.carrier.base)) {
      // base is a fixed point; a non-base orbit never contains it
      for (auto y : d.members) done[y] = true;
      continue;
    }
    d.rep = d.members.front();
    for (auto y : d.members)
      if (a.carrier.ids[y] < a.carrier.ids[d.rep]) d.rep = y;
    d.rep_stab = a.stabilizer_of(d.rep);
    for (auto y : d.members) done[y] = true;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> equivariant_maps(const GSet& a, const GSet& b) {
  if (!a.group.same_elements(b.group))
    throw std::invalid_argument("equivariant_maps: group mismatch");
  if (a.carrier.reduced_size() > kHomEnumerationCap || b.carrier.reduced_size() > kHomEnumerationCap)
    throw std::invalid_argument("size over cap");

  auto orbits = orbit_data(a, false);
  // per orbit: admissible images y of the representative (Stab(rep) must fix y)
  std::vector<std::vector<std::uint32_t>> choices(orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    for (std::uint32_t y = 0; y < b.carrier.size(); ++y) {
      bool ok = true;
      for (std::size_t s : orbits[k].rep_stab)
        if (b.action[s][y] != y) {
          ok = false;
          break;
        }
      if (ok) choices[k].push_back(y);
    }
  }

  std::vector<std::vector<std::uint32_t>> maps;
  std::vector<std::uint32_t> current(a.carrier.size(), b.carrier.base);
  // transporters: for each orbit member, one group element carrying rep to it
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> transport(orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    for (auto m : orbits[k].members) {
      for (std::size_t g = 0; g < a.group.order(); ++g)
        if (a.action[g][orbits[k].rep] == m) {
          transport[k].push_back({m, g});
          break;
        }
    }
  }

  std::vector<std::size_t> pick(orbits.size(), 0);
  std::size_t total = 1;
  for (auto& c : choices) {
    if (total > 2'000'000 / std::max<std::size_t>(c.size(), 1)) throw std::invalid_argument("size over cap");
    total *= c.size();
  }
  maps.reserve(total);

  // odometer over per-orbit choices
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      pick[k] = rem % choices[k].size();
      rem /= choices[k].size();
    }
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      std::uint32_t y = choices[k][pick[k]];
      for (auto [m, g] : transport[k]) current[m] = b.action[g][y];
    }
    current[a.carrier.base] = b.carrier.base;
    maps.push_back(current);
  }
  std::sort(maps.begin(), maps.end());
  return maps;
}

AdjunctionReport adjunction_check(const PermGroup& g, const EmbeddingSpec& h, const GSet& x,
                                  const GSet& y) {
  if (x.carrier.reduced_size() > kHomEnumerationCap || y.carrier.reduced_size() > kHomEnumerationCap)
    throw std::invalid_argument("size over cap");
  CorSet cx = cor_with_witness(g, h, x);
  GSet ry = res(g, h, y);

  auto lhs = equivariant_maps(cx.gset, y);    // Hom_G(cor X, Y)
  auto rhs = equivariant_maps(x, ry);         // Hom_H(X, res Y)

  AdjunctionReport rep;
  rep.lhs_count = lhs.size();
  rep.rhs_count = rhs.size();
  rep.pairing.assign(lhs.size(), 0);

  // unit: F |-> (x |-> F([(e, x)]))
  std::vector<bool> hit(rhs.size(), false);
  bool ok = true;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    std::vector<std::uint32_t> f(x.carrier.size());
    for (std::uint32_t x0 = 0; x0 < x.carrier.size(); ++x0)
      f[x0] = lhs[i][cx.class_of(g.identity_index(), x0)];
    auto it = std::lower_bound(rhs.begin(), rhs.end(), f);
    if (it == rhs.end() || *it != f) {
      ok = false;
      break;
    }
    auto j = static_cast<std::size_t>(it - rhs.begin());
    if (hit[j]) {
      ok = false;
      break;
    }
    hit[j] = true;
    rep.pairing[i] = static_cast<std::uint32_t>(j);
  }
  rep.unit_bijection_ok = ok && lhs.size() == rhs.size();

  // counit round trip: F = ( [(g0,x0)] |-> g0 . f(x0) ) for f the unit image of F
  bool rt = ok;
  if (rt) {
    for (std::size_t i = 0; i < lhs.size() && rt; ++i) {
      const auto& f = rhs[rep.pairing[i]];
      for (std::uint32_t c = 0; c < cx.gset.carrier.size() && rt; ++c) {
        auto [g0, x0] = cx.rep[c];
        if (y.action[g0][f[x0]] != lhs[i][c]) rt = false;
      }
    }
  }
  rep.counit_roundtrip_ok = rt;
  return rep;
}

std::optional<std::vector<std::uint32_t>> find_equivariant_bijection(const GSet& a, const GSet& b) {
  if (!a.group.same_elements(b.group)) return std::nullopt;
  if (a.carrier.size() != b.carrier.size()) return std::nullopt;

  auto oa = orbit_data(a, false);
  auto ob = orbit_data(b, false);
  if (oa.size() != ob.size()) return std::nullopt;

  std::vector<std::uint32_t> f(a.carrier.size(), b.carrier.base);
  std::vector<bool> used(ob.size(), false);

  // match orbit k of A against an unused orbit of B of the same size whose
  // members contain a point with the same stabilizer as A's representative
  auto assign = [&](std::size_t k, auto&& self) -> bool {
    if (k == oa.size()) return true;
    for (std::size_t j = 0; j < ob.size(); ++j) {
      if (used[j] || ob[j].members.size() != oa[k].members.size()) continue;
      for (auto y : ob[j].members) {
        // same orbit size forces equality once Stab(rep) ⊆ Stab(y)
        if (!sorted_subset(oa[k].rep_stab, b.stabilizer_of(y))) continue;
        for (auto m : oa[k].members) {
          for (std::size_t g0 = 0; g0 < a.group.order(); ++g0)
            if (a.action[g0][oa[k].rep] == m) {
              f[m] = b.action[g0][y];
              break;
            }
        }
        used[j] = true;
        if (self(k + 1, self)) return true;
        used[j] = false;
        break;  // other points of the same orbit give the same matching up to iso
      }
    }
    return false;
  };
  if (!assign(0, assign)) return std::nullopt;
  if (!verify_equivariant_bijection(a, b, f)) return std::nullopt;
  return f;
}

bool verify_equivariant_bijection(const GSet& a, const GSet& b,
                                  const std::vector<std::uint32_t>& f) {
  if (f.size() != a.carrier.size() || a.carrier.size() != b.carrier.size()) return false;
  if (f[a.carrier.base] != b.carrier.base) return false;
  std::vector<bool> seen(b.carrier.size(), false);
  for (auto v : f) {
    if (v >= b.carrier.size() || seen[v]) return false;
    seen[v] = true;
  }
  if (!a.group.same_elements(b.group)) return false;
  for (std::size_t g0 : a.group.generator_indices())
    for (std::uint32_t x0 = 0; x0 < a.carrier.size(); ++x0)
      if (f[a.action[g0][x0]] != b.action[g0][f[x0]]) return false;
  return true;
}

}  // namespace sympow
