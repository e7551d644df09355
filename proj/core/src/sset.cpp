#include "sympow/sset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sympow/codec.hpp"

namespace sympow {

std::uint32_t PointedSimplicialSet::index_of(int m, const std::string& id) const {
  auto r = find(m, id);
  if (!r) throw std::invalid_argument("PointedSimplicialSet: unknown id " + id);
  return *r;
}

std::optional<std::uint32_t> PointedSimplicialSet::find(int m, const std::string& id) const {
  const auto& v = ids_[static_cast<std::size_t>(m)];
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - v.begin());
}

std::size_t PointedSimplicialSet::nondegenerate_reduced_count(int m) const {
  std::size_t c = 0;
  for (std::uint32_t x = 0; x < size(m); ++x)
    if (x != basepoint(m) && !is_degenerate(m, x)) ++c;
  return c;
}

bool PointedSimplicialSet::operator==(const PointedSimplicialSet& o) const {
  return dim_bound_ == o.dim_bound_ && ids_ == o.ids_ && base_ == o.base_ &&
         faces_ == o.faces_ && degens_ == o.degens_;
}

void PointedSimplicialSet::validate() const {
  const int d = dim_bound_;
  auto fail = [](const std::string& what) { throw std::logic_error("sset validate: " + what); };
  if (static_cast<int>(ids_.size()) != d + 1) fail("level count");
  for (int m = 0; m <= d; ++m) {
    const auto& v = ids_[static_cast<std::size_t>(m)];
    if (v.empty()) fail("empty level");
    if (!std::is_sorted(v.begin(), v.end())) fail("level ids not sorted");
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) fail("duplicate ids");
    if (base_[static_cast<std::size_t>(m)] >= v.size()) fail("basepoint index");
  }
  for (int m = 1; m <= d; ++m) {
    const auto& fm = faces_[static_cast<std::size_t>(m)];
    if (static_cast<int>(fm.size()) != m + 1) fail("face arity");
    for (const auto& row : fm) {
      if (row.size() != size(m)) fail("face table size");
      for (auto y : row)
        if (y >= size(m - 1)) fail("face range");
    }
    for (const auto& row : fm)
      if (row[basepoint(m)] != basepoint(m - 1)) fail("basepoint not absorbing under faces");
  }
  for (int m = 0; m < d; ++m) {
    const auto& sm = degens_[static_cast<std::size_t>(m)];
    if (static_cast<int>(sm.size()) != m + 1) fail("degeneracy arity");
    for (const auto& row : sm) {
      if (row.size() != size(m)) fail("degeneracy table size");
      for (auto y : row)
        if (y >= size(m + 1)) fail("degeneracy range");
    }
    for (const auto& row : sm)
      if (row[basepoint(m)] != basepoint(m + 1)) fail("basepoint not absorbing under degeneracies");
  }
  // d_i d_j = d_{j-1} d_i for i < j
  for (int m = 2; m <= d; ++m)
    for (int j = 1; j <= m; ++j)
      for (int i = 0; i < j; ++i)
        for (std::uint32_t x = 0; x < size(m); ++x)
          if (face(m - 1, i, face(m, j, x)) != face(m - 1, j - 1, face(m, i, x)))
            fail("d_i d_j identity");
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int m = 0; m + 2 <= d; ++m)
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= j; ++i)
        for (std::uint32_t x = 0; x < size(m); ++x)
          if (degeneracy(m + 1, i, degeneracy(m, j, x)) !=
              degeneracy(m + 1, j + 1, degeneracy(m, i, x)))
            fail("s_i s_j identity");
  // mixed identities
  for (int m = 0; m < d; ++m) {
    for (int j = 0; j <= m; ++j) {
      for (int i = 0; i <= m + 1; ++i) {
        for (std::uint32_t x = 0; x < size(m); ++x) {
          std::uint32_t lhs = face(m + 1, i, degeneracy(m, j, x));
          std::uint32_t rhs;
          if (i == j || i == j + 1) {
            rhs = x;
          } else if (i < j) {
            rhs = degeneracy(m - 1, j - 1, face(m, i, x));
          } else {
            rhs = degeneracy(m - 1, j, face(m, i - 1, x));
          }
          if (lhs != rhs) fail("d_i s_j identity");
        }
      }
    }
  }
}

PointedSimplicialSet::FinalizeResult PointedSimplicialSet::finalize(Raw raw) {
  const int d = raw.dim_bound;
  if (d < 0) throw std::invalid_argument("finalize: negative dim_bound");
  if (static_cast<int>(raw.ids.size()) != d + 1) throw std::invalid_argument("finalize: level count");

  PointedSimplicialSet s;
  s.dim_bound_ = d;
  s.ids_.resize(static_cast<std::size_t>(d) + 1);
  s.base_.resize(static_cast<std::size_t>(d) + 1);
  s.faces_.resize(static_cast<std::size_t>(d) + 1);
  s.degens_.resize(static_cast<std::size_t>(d) + 1);

  FinalizeResult out;
  out.new_index.resize(static_cast<std::size_t>(d) + 1);

  for (int m = 0; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    const auto& prov = raw.ids[mi];
    std::vector<std::uint32_t> order(prov.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return prov[a] < prov[b]; });
    s.ids_[mi].resize(prov.size());
    out.new_index[mi].resize(prov.size());
    for (std::uint32_t k = 0; k < prov.size(); ++k) {
      s.ids_[mi][k] = prov[order[k]];
      out.new_index[mi][order[k]] = k;
    }
    for (std::size_t k = 1; k < s.ids_[mi].size(); ++k)
      if (s.ids_[mi][k - 1] == s.ids_[mi][k])
        throw std::invalid_argument("finalize: duplicate id " + s.ids_[mi][k]);
    s.base_[mi] = out.new_index[mi][0];  // provisional basepoint sits at position 0
  }

  for (int m = 1; m <= d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    const auto& provf = raw.faces[mi];
    s.faces_[mi].assign(static_cast<std::size_t>(m) + 1,
                        std::vector<std::uint32_t>(s.ids_[mi].size()));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t x = 0; x < provf[static_cast<std::size_t>(i)].size(); ++x)
        s.faces_[mi][static_cast<std::size_t>(i)][out.new_index[mi][x]] =
            out.new_index[mi - 1][provf[static_cast<std::size_t>(i)][x]];
  }
  for (int m = 0; m < d; ++m) {
    auto mi = static_cast<std::size_t>(m);
    const auto& provs = raw.degens[mi];
    s.degens_[mi].assign(static_cast<std::size_t>(m) + 1,
                         std::vector<std::uint32_t>(s.ids_[mi].size()));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t x = 0; x < provs[static_cast<std::size_t>(i)].size(); ++x)
        s.degens_[mi][static_cast<std::size_t>(i)][out.new_index[mi][x]] =
            out.new_index[mi + 1][provs[static_cast<std::size_t>(i)][x]];
  }

  // degeneracy flags
  s.degenerate_.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) s.degenerate_[static_cast<std::size_t>(m)].assign(s.size(m), false);
  for (int m = 0; m < d; ++m)
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t x = 0; x < s.size(m); ++x)
        s.degenerate_[static_cast<std::size_t>(m) + 1][s.degeneracy(m, i, x)] = true;

  int max_nondeg = -1;
  for (int m = 0; m <= d; ++m)
    if (s.nondegenerate_reduced_count(m) > 0) max_nondeg = m;
  if (raw.claimed_geom_bound && *raw.claimed_geom_bound <= d) {
    if (max_nondeg > *raw.claimed_geom_bound)
      throw std::logic_error("finalize: non-degenerate simplex above the claimed geometric bound");
    s.geometric_dim_ = max_nondeg;
  }

  s.validate();
  out.sset = std::move(s);
  return out;
}

void SimplicialMap::validate() const {
  if (comp.size() != static_cast<std::size_t>(source.dim_bound()) + 1 ||
      source.dim_bound() != target.dim_bound())
    throw std::logic_error("SimplicialMap: level count mismatch");
  for (int m = 0; m <= source.dim_bound(); ++m) {
    if (comp[static_cast<std::size_t>(m)].size() != source.size(m))
      throw std::logic_error("SimplicialMap: component size mismatch");
    for (auto y : comp[static_cast<std::size_t>(m)])
      if (y >= target.size(m)) throw std::logic_error("SimplicialMap: component out of range");
    if (apply(m, source.basepoint(m)) != target.basepoint(m))
      throw std::logic_error("SimplicialMap: basepoint not preserved");
  }
  for (int m = 1; m <= source.dim_bound(); ++m)
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t x = 0; x < source.size(m); ++x)
        if (apply(m - 1, source.face(m, i, x)) != target.face(m, i, apply(m, x)))
          throw std::logic_error("SimplicialMap: does not commute with faces");
  for (int m = 0; m < source.dim_bound(); ++m)
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t x = 0; x < source.size(m); ++x)
        if (apply(m + 1, source.degeneracy(m, i, x)) != target.degeneracy(m, i, apply(m, x)))
          throw std::logic_error("SimplicialMap: does not commute with degeneracies");
}

bool SimplicialMap::levelwise_injective() const {
  for (int m = 0; m <= source.dim_bound(); ++m) {
    std::vector<bool> seen(target.size(m), false);
    for (auto y : comp[static_cast<std::size_t>(m)]) {
      if (seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

Inclusion::Inclusion(SimplicialMap m) : map(std::move(m)) {
  map.validate();
  if (!map.levelwise_injective()) throw std::invalid_argument("not an inclusion");
}

namespace {

// Scaffolding for levelwise constructions: non-base elements are payloads with
// ids; provisional index 0 is the basepoint.
template <class Payload>
struct LevelData {
  std::vector<std::vector<Payload>> payloads;      // per level
  std::vector<std::map<Payload, std::uint32_t>> index;  // payload -> provisional index (>=1)
};

template <class Payload, class IdFn, class FaceFn, class DegenFn>
PointedSimplicialSet assemble(int dim_bound, LevelData<Payload>& lv, IdFn id_fn, FaceFn face_fn,
                              DegenFn degen_fn, std::optional<int> claimed_bound,
                              const std::vector<std::string>& base_ids = {}) {
  PointedSimplicialSet::Raw raw;
  raw.dim_bound = dim_bound;
  raw.claimed_geom_bound = claimed_bound;
  raw.ids.resize(static_cast<std::size_t>(dim_bound) + 1);
  raw.faces.resize(static_cast<std::size_t>(dim_bound) + 1);
  raw.degens.resize(static_cast<std::size_t>(dim_bound) + 1);

  lv.index.resize(static_cast<std::size_t>(dim_bound) + 1);
  for (int m = 0; m <= dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.ids[mi].push_back(base_ids.empty() ? std::string("*") : base_ids[mi]);
    for (std::uint32_t k = 0; k < lv.payloads[mi].size(); ++k) {
      lv.index[mi][lv.payloads[mi][k]] = k + 1;
      raw.ids[mi].push_back(id_fn(m, lv.payloads[mi][k]));
    }
  }
  auto lookup = [&](int m, const std::optional<Payload>& p) -> std::uint32_t {
    if (!p) return 0;
    auto it = lv.index[static_cast<std::size_t>(m)].find(*p);
    if (it == lv.index[static_cast<std::size_t>(m)].end())
      throw std::logic_error("assemble: structure map leaves the level set");
    return it->second;
  };
  for (int m = 1; m <= dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.faces[mi].assign(static_cast<std::size_t>(m) + 1,
                         std::vector<std::uint32_t>(lv.payloads[mi].size() + 1, 0));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t k = 0; k < lv.payloads[mi].size(); ++k)
        raw.faces[mi][static_cast<std::size_t>(i)][k + 1] =
            lookup(m - 1, face_fn(m, i, lv.payloads[mi][k]));
  }
  for (int m = 0; m < dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.degens[mi].assign(static_cast<std::size_t>(m) + 1,
                          std::vector<std::uint32_t>(lv.payloads[mi].size() + 1, 0));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t k = 0; k < lv.payloads[mi].size(); ++k)
        raw.degens[mi][static_cast<std::size_t>(i)][k + 1] =
            lookup(m + 1, degen_fn(m, i, lv.payloads[mi][k]));
  }
  return PointedSimplicialSet::finalize(std::move(raw)).sset;
}

char value_char(int v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

// all monotone {0..n}-valued strings of the given length whose steps are 0/1,
// starting at 0 and ending at n (the monotone surjections [len-1] -> [n])
void monotone_surjections(int len, int n, std::vector<std::string>& out) {
  std::string cur(static_cast<std::size_t>(len), '0');
  // choose positions of the n unit steps among len-1 steps
  std::vector<int> steps;
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (remaining == 0) {
      std::string s(static_cast<std::size_t>(len), '0');
      int v = 0;
      std::size_t si = 0;
      for (int i = 0; i < len; ++i) {
        if (si < steps.size() && steps[si] == i) {
          ++v;
          ++si;
        }
        s[static_cast<std::size_t>(i)] = value_char(v);
      }
      out.push_back(std::move(s));
      return;
    }
    for (int i = pos; i <= len - 1 - remaining; ++i) {
      steps.push_back(i + 1);  // value increases entering position i+1
      self(self, i + 1, remaining - 1);
      steps.pop_back();
    }
  };
  if (n <= len - 1 && n >= 0) rec(rec, 0, n);
  (void)cur;
}

bool is_surjective_onto(const std::string& s, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (char c : s) {
    int v = c <= '9' ? c - '0' : c - 'a' + 10;
    if (v > n) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (bool b : seen)
    if (!b) return false;
  return true;
}

}  // namespace

PointedSimplicialSet point_space(int dim_bound) {
  LevelData<int> lv;  // no non-base payloads
  lv.payloads.resize(static_cast<std::size_t>(dim_bound) + 1);
  return assemble<int>(
      dim_bound, lv, [](int, int) { return std::string(); },
      [](int, int, int) { return std::optional<int>{}; },
      [](int, int, int) { return std::optional<int>{}; }, -1);
}

PointedSimplicialSet sphere(int n, int dim_bound) {
  if (n < 0) throw std::invalid_argument("sphere: negative dimension");
  if (dim_bound < n) throw std::invalid_argument("bound below geometric dimension");
  LevelData<std::string> lv;
  lv.payloads.resize(static_cast<std::size_t>(dim_bound) + 1);
  for (int m = 0; m <= dim_bound; ++m)
    monotone_surjections(m + 1, n, lv.payloads[static_cast<std::size_t>(m)]);
  auto face = [n](int, int i, const std::string& s) -> std::optional<std::string> {
    std::string t = s;
    t.erase(static_cast<std::size_t>(i), 1);
    if (!is_surjective_onto(t, n)) return std::nullopt;
    return t;
  };
  auto degen = [](int, int i, const std::string& s) -> std::optional<std::string> {
    std::string t = s;
    t.insert(static_cast<std::size_t>(i), 1, s[static_cast<std::size_t>(i)]);
    return t;
  };
  return assemble<std::string>(
      dim_bound, lv, [](int, const std::string& s) { return s; }, face, degen, n);
}

PointedSimplicialSet interval_one_pointed(int dim_bound) {
  if (dim_bound < 1) throw std::invalid_argument("bound below geometric dimension");
  LevelData<std::string> lv;
  lv.payloads.resize(static_cast<std::size_t>(dim_bound) + 1);
  for (int m = 0; m <= dim_bound; ++m) {
    // nondecreasing 01-strings of length m+1, except the constant-1 basepoint
    for (int zeros = m + 1; zeros >= 1; --zeros) {
      std::string s(static_cast<std::size_t>(zeros), '0');
      s += std::string(static_cast<std::size_t>(m + 1 - zeros), '1');
      lv.payloads[static_cast<std::size_t>(m)].push_back(std::move(s));
    }
  }
  auto face = [](int, int i, const std::string& s) -> std::optional<std::string> {
    std::string t = s;
    t.erase(static_cast<std::size_t>(i), 1);
    if (t.find('0') == std::string::npos) return std::nullopt;  // constant 1 = basepoint
    return t;
  };
  auto degen = [](int, int i, const std::string& s) -> std::optional<std::string> {
    std::string t = s;
    t.insert(static_cast<std::size_t>(i), 1, s[static_cast<std::size_t>(i)]);
    return t;
  };
  return assemble<std::string>(
      dim_bound, lv, [](int, const std::string& s) { return s; }, face, degen, 1);
}

PointedSimplicialSet truncate(const PointedSimplicialSet& x, int dim_bound) {
  if (dim_bound > x.dim_bound()) throw std::invalid_argument("truncate: cannot extend");
  if (dim_bound == x.dim_bound()) return x;
  PointedSimplicialSet::Raw raw;
  raw.dim_bound = dim_bound;
  raw.claimed_geom_bound = x.geometric_dim();
  raw.ids.resize(static_cast<std::size_t>(dim_bound) + 1);
  raw.faces.resize(static_cast<std::size_t>(dim_bound) + 1);
  raw.degens.resize(static_cast<std::size_t>(dim_bound) + 1);
  for (int m = 0; m <= dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    // keep sorted order; provisional position 0 must be the basepoint
    raw.ids[mi].push_back(x.id(m, x.basepoint(m)));
    for (std::uint32_t k = 0; k < x.size(m); ++k)
      if (k != x.basepoint(m)) raw.ids[mi].push_back(x.id(m, k));
  }
  auto prov = [&](int m, std::uint32_t k) -> std::uint32_t {
    if (k == x.basepoint(m)) return 0;
    return k < x.basepoint(m) ? k + 1 : k;
  };
  auto orig = [&](int m, std::uint32_t p) -> std::uint32_t {
    if (p == 0) return x.basepoint(m);
    return p <= x.basepoint(m) ? p - 1 : p;
  };
  for (int m = 1; m <= dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.faces[mi].assign(static_cast<std::size_t>(m) + 1,
                         std::vector<std::uint32_t>(x.size(m)));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t p = 0; p < x.size(m); ++p)
        raw.faces[mi][static_cast<std::size_t>(i)][p] = prov(m - 1, x.face(m, i, orig(m, p)));
  }
  for (int m = 0; m < dim_bound; ++m) {
    auto mi = static_cast<std::size_t>(m);
    raw.degens[mi].assign(static_cast<std::size_t>(m) + 1,
                          std::vector<std::uint32_t>(x.size(m)));
    for (int i = 0; i <= m; ++i)
      for (std::uint32_t p = 0; p < x.size(m); ++p)
        raw.degens[mi][static_cast<std::size_t>(i)][p] = prov(m + 1, x.degeneracy(m, i, orig(m, p)));
  }
  return PointedSimplicialSet::finalize(std::move(raw)).sset;
}

PointedSimplicialSet wedge(const PointedSimplicialSet& x0, const PointedSimplicialSet& y0) {
  const int d = std::min(x0.dim_bound(), y0.dim_bound());
  PointedSimplicialSet x = truncate(x0, d), y = truncate(y0, d);
  using P = std::pair<int, std::uint32_t>;  // (side, index)
  LevelData<P> lv;
  lv.payloads.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    for (std::uint32_t k = 0; k < x.size(m); ++k)
      if (k != x.basepoint(m)) lv.payloads[static_cast<std::size_t>(m)].push_back({0, k});
    for (std::uint32_t k = 0; k < y.size(m); ++k)
      if (k != y.basepoint(m)) lv.payloads[static_cast<std::size_t>(m)].push_back({1, k});
  }
  auto id_fn = [&](int m, const P& p) {
    return (p.first == 0 ? "l:" + x.id(m, p.second) : "r:" + y.id(m, p.second));
  };
  auto face = [&](int m, int i, const P& p) -> std::optional<P> {
    const PointedSimplicialSet& s = p.first == 0 ? x : y;
    std::uint32_t f = s.face(m, i, p.second);
    if (f == s.basepoint(m - 1)) return std::nullopt;
    return P{p.first, f};
  };
  auto degen = [&](int m, int i, const P& p) -> std::optional<P> {
    const PointedSimplicialSet& s = p.first == 0 ? x : y;
    return P{p.first, s.degeneracy(m, i, p.second)};
  };
  std::optional<int> bound;
  if (x.geometric_dim() && y.geometric_dim())
    bound = std::max(*x.geometric_dim(), *y.geometric_dim());
  return assemble<P>(d, lv, id_fn, face, degen, bound);
}

PointedSimplicialSet smash(const PointedSimplicialSet& x0, const PointedSimplicialSet& y0) {
  const int d = std::min(x0.dim_bound(), y0.dim_bound());
  PointedSimplicialSet x = truncate(x0, d), y = truncate(y0, d);
  using P = std::pair<std::uint32_t, std::uint32_t>;
  LevelData<P> lv;
  lv.payloads.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m)
    for (std::uint32_t a = 0; a < x.size(m); ++a) {
      if (a == x.basepoint(m)) continue;
      for (std::uint32_t b = 0; b < y.size(m); ++b) {
        if (b == y.basepoint(m)) continue;
        lv.payloads[static_cast<std::size_t>(m)].push_back({a, b});
      }
    }
  auto id_fn = [&](int m, const P& p) { return encode_pair(x.id(m, p.first), y.id(m, p.second)); };
  auto face = [&](int m, int i, const P& p) -> std::optional<P> {
    std::uint32_t a = x.face(m, i, p.first), b = y.face(m, i, p.second);
    if (a == x.basepoint(m - 1) || b == y.basepoint(m - 1)) return std::nullopt;
    return P{a, b};
  };
  auto degen = [&](int m, int i, const P& p) -> std::optional<P> {
    return P{x.degeneracy(m, i, p.first), y.degeneracy(m, i, p.second)};
  };
  std::optional<int> bound;
  if (x.geometric_dim() && y.geometric_dim()) {
    bound = (*x.geometric_dim() < 0 || *y.geometric_dim() < 0)
                ? -1
                : *x.geometric_dim() + *y.geometric_dim();
  }
  return assemble<P>(d, lv, id_fn, face, degen, bound);
}

PointedSimplicialSet smash_power(const PointedSimplicialSet& x, int n) {
  if (n < 0) throw std::invalid_argument("smash_power: negative exponent");
  if (n == 0) return sphere(0, x.dim_bound());
  if (n == 1) return x;
  const int d = x.dim_bound();
  using P = std::vector<std::uint32_t>;
  LevelData<P> lv;
  lv.payloads.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    std::vector<std::uint32_t> nonbase;
    for (std::uint32_t k = 0; k < x.size(m); ++k)
      if (k != x.basepoint(m)) nonbase.push_back(k);
    P cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n) {
        lv.payloads[static_cast<std::size_t>(m)].push_back(cur);
        return;
      }
      for (auto k : nonbase) {
        cur[static_cast<std::size_t>(pos)] = k;
        self(self, pos + 1);
      }
    };
    if (!nonbase.empty()) rec(rec, 0);
  }
  auto id_fn = [&](int m, const P& p) {
    std::vector<std::string> parts;
    parts.reserve(p.size());
    for (auto k : p) parts.push_back(x.id(m, k));
    return encode_tuple(parts);
  };
  auto face = [&](int m, int i, const P& p) -> std::optional<P> {
    P q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k] = x.face(m, i, p[k]);
      if (q[k] == x.basepoint(m - 1)) return std::nullopt;
    }
    return q;
  };
  auto degen = [&](int m, int i, const P& p) -> std::optional<P> {
    P q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) q[k] = x.degeneracy(m, i, p[k]);
    return q;
  };
  std::optional<int> bound;
  if (x.geometric_dim()) bound = *x.geometric_dim() < 0 ? -1 : n * *x.geometric_dim();
  return assemble<P>(d, lv, id_fn, face, degen, bound);
}

PointedSimplicialSet sym_power(int n, const PointedSimplicialSet& x) {
  if (n < 0) throw std::invalid_argument("sym_power: negative exponent");
  if (n == 0) return sphere(0, x.dim_bound());
  if (n == 1) return x;
  const int d = x.dim_bound();
  using P = std::vector<std::uint32_t>;  // sorted multiset of non-base indices
  LevelData<P> lv;
  lv.payloads.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    std::vector<std::uint32_t> nonbase;
    for (std::uint32_t k = 0; k < x.size(m); ++k)
      if (k != x.basepoint(m)) nonbase.push_back(k);
    P cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, std::size_t from) -> void {
      if (pos == n) {
        lv.payloads[static_cast<std::size_t>(m)].push_back(cur);
        return;
      }
      for (std::size_t j = from; j < nonbase.size(); ++j) {
        cur[static_cast<std::size_t>(pos)] = nonbase[j];
        self(self, pos + 1, j);
      }
    };
    if (!nonbase.empty()) rec(rec, 0, 0);
  }
  auto id_fn = [&](int m, const P& p) {
    std::vector<std::string> parts;
    parts.reserve(p.size());
    for (auto k : p) parts.push_back(x.id(m, k));
    return encode_multiset(parts);  // indices sorted ascending = ids sorted ascending
  };
  auto face = [&](int m, int i, const P& p) -> std::optional<P> {
    P q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k] = x.face(m, i, p[k]);
      if (q[k] == x.basepoint(m - 1)) return std::nullopt;
    }
    std::sort(q.begin(), q.end());
    return q;
  };
  auto degen = [&](int m, int i, const P& p) -> std::optional<P> {
    P q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) q[k] = x.degeneracy(m, i, p[k]);
    std::sort(q.begin(), q.end());
    return q;
  };
  std::optional<int> bound;
  if (x.geometric_dim()) bound = *x.geometric_dim() < 0 ? -1 : n * *x.geometric_dim();
  return assemble<P>(d, lv, id_fn, face, degen, bound);
}

SimplicialMap sym_power_map(int n, const SimplicialMap& f) {
  if (n < 0) throw std::invalid_argument("sym_power_map: negative exponent");
  SimplicialMap out;
  out.source = sym_power(n, f.source);
  out.target = sym_power(n, f.target);
  if (n == 1) {
    out.comp = f.comp;
    out.validate();
    return out;
  }
  out.comp.resize(static_cast<std::size_t>(out.source.dim_bound()) + 1);
  for (int m = 0; m <= out.source.dim_bound(); ++m) {
    auto& row = out.comp[static_cast<std::size_t>(m)];
    row.resize(out.source.size(m));
    row[out.source.basepoint(m)] = out.target.basepoint(m);
    if (n == 0) {
      for (std::uint32_t c = 0; c < out.source.size(m); ++c) row[c] = c;
      continue;
    }
    // re-enumerate the source multisets; ids identify them in the built object
    std::vector<std::uint32_t> nonbase;
    for (std::uint32_t k = 0; k < f.source.size(m); ++k)
      if (k != f.source.basepoint(m)) nonbase.push_back(k);
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(n));
    auto emit = [&]() {
      std::vector<std::string> parts;
      bool to_base = false;
      std::vector<std::string> images;
      for (auto k : cur) {
        parts.push_back(f.source.id(m, k));
        std::uint32_t yi = f.apply(m, k);
        if (yi == f.target.basepoint(m))
          to_base = true;
        else
          images.push_back(f.target.id(m, yi));
      }
      std::uint32_t c = out.source.index_of(m, encode_multiset(parts));
      if (to_base) {
        row[c] = out.target.basepoint(m);
      } else {
        std::sort(images.begin(), images.end());
        row[c] = out.target.index_of(m, encode_multiset(images));
      }
    };
    auto rec = [&](auto&& self, int pos, std::size_t from) -> void {
      if (pos == n) {
        emit();
        return;
      }
      for (std::size_t jj = from; jj < nonbase.size(); ++jj) {
        cur[static_cast<std::size_t>(pos)] = nonbase[jj];
        self(self, pos + 1, jj);
      }
    };
    if (!nonbase.empty()) rec(rec, 0, 0);
  }
  out.validate();
  return out;
}

PointedSimplicialSet suspend(const PointedSimplicialSet& x) {
  return smash(sphere(1, x.dim_bound()), x);
}

ConeResult cone(const PointedSimplicialSet& x) {
  PointedSimplicialSet iv = interval_one_pointed(x.dim_bound());
  PointedSimplicialSet c = smash(x, iv);
  SimplicialMap incl;
  incl.source = x;
  incl.target = c;
  incl.comp.resize(static_cast<std::size_t>(x.dim_bound()) + 1);
  for (int m = 0; m <= x.dim_bound(); ++m) {
    std::string zeros(static_cast<std::size_t>(m) + 1, '0');
    auto& row = incl.comp[static_cast<std::size_t>(m)];
    row.resize(x.size(m));
    for (std::uint32_t k = 0; k < x.size(m); ++k) {
      if (k == x.basepoint(m))
        row[k] = c.basepoint(m);
      else
        row[k] = c.index_of(m, encode_pair(x.id(m, k), zeros));
    }
  }
  return ConeResult{c, Inclusion(std::move(incl))};
}

QuotientResult quotient_by_subobject(const Inclusion& j) {
  const SimplicialMap& f = j.map;
  const PointedSimplicialSet& y = f.target;
  const int d = y.dim_bound();
  // image of the reduced part of X, per level
  std::vector<std::vector<bool>> in_image(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    in_image[static_cast<std::size_t>(m)].assign(y.size(m), false);
    for (std::uint32_t k = 0; k < f.source.size(m); ++k)
      if (k != f.source.basepoint(m))
        in_image[static_cast<std::size_t>(m)][f.apply(m, k)] = true;
  }
  LevelData<std::uint32_t> lv;
  lv.payloads.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m)
    for (std::uint32_t k = 0; k < y.size(m); ++k)
      if (k != y.basepoint(m) && !in_image[static_cast<std::size_t>(m)][k])
        lv.payloads[static_cast<std::size_t>(m)].push_back(k);
  auto id_fn = [&](int m, std::uint32_t k) { return y.id(m, k); };
  auto face = [&](int m, int i, std::uint32_t k) -> std::optional<std::uint32_t> {
    std::uint32_t v = y.face(m, i, k);
    if (v == y.basepoint(m - 1) || in_image[static_cast<std::size_t>(m) - 1][v]) return std::nullopt;
    return v;
  };
  auto degen = [&](int m, int i, std::uint32_t k) -> std::optional<std::uint32_t> {
    return y.degeneracy(m, i, k);  // degeneracies of survivors survive
  };
  std::vector<std::string> base_ids;
  for (int m = 0; m <= d; ++m) base_ids.push_back(y.id(m, y.basepoint(m)));
  PointedSimplicialSet z =
      assemble<std::uint32_t>(d, lv, id_fn, face, degen, y.geometric_dim(), base_ids);

  SimplicialMap proj;
  proj.source = y;
  proj.target = z;
  proj.comp.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    auto& row = proj.comp[static_cast<std::size_t>(m)];
    row.resize(y.size(m));
    for (std::uint32_t k = 0; k < y.size(m); ++k) {
      if (k == y.basepoint(m) || in_image[static_cast<std::size_t>(m)][k])
        row[k] = z.basepoint(m);
      else
        row[k] = z.index_of(m, y.id(m, k));
    }
  }
  proj.validate();
  return QuotientResult{std::move(z), std::move(proj)};
}

Inclusion identity_inclusion(const PointedSimplicialSet& x) {
  SimplicialMap m;
  m.source = x;
  m.target = x;
  m.comp.resize(static_cast<std::size_t>(x.dim_bound()) + 1);
  for (int lvl = 0; lvl <= x.dim_bound(); ++lvl) {
    m.comp[static_cast<std::size_t>(lvl)].resize(x.size(lvl));
    std::iota(m.comp[static_cast<std::size_t>(lvl)].begin(),
              m.comp[static_cast<std::size_t>(lvl)].end(), 0u);
  }
  return Inclusion(std::move(m));
}

Inclusion basepoint_inclusion(const PointedSimplicialSet& x) {
  SimplicialMap m;
  m.source = point_space(x.dim_bound());
  m.target = x;
  m.comp.resize(static_cast<std::size_t>(x.dim_bound()) + 1);
  for (int lvl = 0; lvl <= x.dim_bound(); ++lvl)
    m.comp[static_cast<std::size_t>(lvl)] = {x.basepoint(lvl)};
  return Inclusion(std::move(m));
}

Inclusion wedge_left_inclusion(const PointedSimplicialSet& x, const PointedSimplicialSet& y) {
  const int d = std::min(x.dim_bound(), y.dim_bound());
  PointedSimplicialSet xt = truncate(x, d);
  PointedSimplicialSet w = wedge(x, y);
  SimplicialMap m;
  m.source = xt;
  m.target = w;
  m.comp.resize(static_cast<std::size_t>(d) + 1);
  for (int lvl = 0; lvl <= d; ++lvl) {
    auto& row = m.comp[static_cast<std::size_t>(lvl)];
    row.resize(xt.size(lvl));
    for (std::uint32_t k = 0; k < xt.size(lvl); ++k) {
      if (k == xt.basepoint(lvl))
        row[k] = w.basepoint(lvl);
      else
        row[k] = w.index_of(lvl, "l:" + xt.id(lvl, k));
    }
  }
  return Inclusion(std::move(m));
}

}  // namespace sympow
