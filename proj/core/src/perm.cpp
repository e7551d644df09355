#include "sympow/perm.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sympow {

Perm perm_identity(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

bool perm_is_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("perm_compose: degree mismatch");
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::string perm_one_line(const Perm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(static_cast<int>(p[i]) + 1);
  }
  return s;
}

Perm perm_block_sum(const Perm& a, const Perm& b) {
  Perm r(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[a.size() + i] = static_cast<std::uint8_t>(b[i] + a.size());
  return r;
}

Perm perm_block_rearrange(const Perm& tau, const std::vector<int>& sizes) {
  if (tau.size() != sizes.size()) throw std::invalid_argument("perm_block_rearrange: arity mismatch");
  int total = 0;
  for (int s : sizes) total += s;
  // new_offset[k] = start of block k's slot after rearrangement
  std::vector<int> new_offset(sizes.size(), 0);
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    int off = 0;
    for (std::size_t k2 = 0; k2 < sizes.size(); ++k2)
      if (tau[k2] < tau[k]) off += sizes[k2];
    new_offset[k] = off;
  }
  Perm r(static_cast<std::size_t>(total));
  int pos = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    for (int j = 0; j < sizes[k]; ++j)
      r[static_cast<std::size_t>(pos + j)] = static_cast<std::uint8_t>(new_offset[k] + j);
    pos += sizes[k];
  }
  return r;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 0 || degree > kMaxPermDegree)
    throw std::invalid_argument("PermGroup: degree over cap (max " + std::to_string(kMaxPermDegree) + ")");
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != degree || !perm_is_valid(g))
      throw std::invalid_argument("PermGroup: invalid generator");
  }
  std::set<Perm> closure;
  std::deque<Perm> work;
  Perm id = perm_identity(degree);
  closure.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    Perm cur = work.front();
    work.pop_front();
    for (const auto& g : generators_) {
      Perm nxt = perm_compose(g, cur);
      if (closure.insert(nxt).second) work.push_back(nxt);
    }
  }
  elements_.assign(closure.begin(), closure.end());
  identity_index_ = index_of(id);
  for (const auto& g : generators_) generator_indices_.push_back(index_of(g));
}

std::optional<std::size_t> PermGroup::find(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto idx = find(p);
  if (!idx) throw std::invalid_argument("PermGroup: element not in group");
  return *idx;
}

bool PermGroup::contains(const Perm& p) const { return find(p).has_value(); }

std::size_t PermGroup::compose(std::size_t i, std::size_t j) const {
  return index_of(perm_compose(elements_[i], elements_[j]));
}

std::size_t PermGroup::inverse_index(std::size_t i) const {
  return index_of(perm_inverse(elements_[i]));
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const auto& e : elements_)
    if (!g.contains(e)) return false;
  return true;
}

bool PermGroup::same_elements(const PermGroup& g) const {
  return degree_ == g.degree() && elements_ == g.elements();
}

PermGroup symmetric_group(int degree) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < degree; ++i) {
    Perm t = perm_identity(degree);
    std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]);
    gens.push_back(t);
  }
  return PermGroup(degree, gens);
}

PermGroup trivial_group(int degree) { return PermGroup(degree, {}); }

EmbeddingSpec EmbeddingSpec::young(int a, int b) {
  EmbeddingSpec e;
  e.kind = Kind::Young;
  e.a = a;
  e.b = b;
  return e;
}
EmbeddingSpec EmbeddingSpec::block_shuffle(int p, int n) {
  EmbeddingSpec e;
  e.kind = Kind::BlockShuffle;
  e.a = p;
  e.b = n;
  return e;
}
EmbeddingSpec EmbeddingSpec::tail(int m, int k) {
  EmbeddingSpec e;
  e.kind = Kind::Tail;
  e.a = m;
  e.b = k;
  return e;
}
EmbeddingSpec EmbeddingSpec::joint(std::vector<EmbeddingSpec> parts) {
  EmbeddingSpec e;
  e.kind = Kind::Joint;
  e.parts = std::move(parts);
  return e;
}

int EmbeddingSpec::ambient_degree() const {
  switch (kind) {
    case Kind::Young:
      return a + b;
    case Kind::BlockShuffle:
      return a * b;
    case Kind::Tail:
      return a;
    case Kind::Joint: {
      if (parts.empty()) throw std::invalid_argument("EmbeddingSpec: empty joint");
      int d = parts.front().ambient_degree();
      for (const auto& p : parts)
        if (p.ambient_degree() != d) throw std::invalid_argument("EmbeddingSpec: joint degree mismatch");
      return d;
    }
  }
  throw std::logic_error("EmbeddingSpec: bad kind");
}

namespace {
unsigned long factorial(int n) {
  unsigned long r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}
}  // namespace

unsigned long EmbeddingSpec::expected_order() const {
  switch (kind) {
    case Kind::Young:
      return factorial(a) * factorial(b);
    case Kind::BlockShuffle:
      return factorial(a);
    case Kind::Tail:
      return factorial(b);
    case Kind::Joint: {
      unsigned long r = 1;
      for (const auto& p : parts) r *= p.expected_order();
      return r;
    }
  }
  throw std::logic_error("EmbeddingSpec: bad kind");
}

std::vector<Perm> EmbeddingSpec::generators() const {
  int m = ambient_degree();
  std::vector<Perm> gens;
  auto adjacent = [&](int i) {
    Perm t = perm_identity(m);
    std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]);
    return t;
  };
  switch (kind) {
    case Kind::Young: {
      for (int i = 0; i + 1 < a; ++i) gens.push_back(adjacent(i));
      for (int i = a; i + 1 < a + b; ++i) gens.push_back(adjacent(i));
      return gens;
    }
    case Kind::BlockShuffle: {
      // swap blocks k and k+1, each of size b
      for (int k = 0; k + 1 < a; ++k) {
        Perm t = perm_identity(m);
        for (int j = 0; j < b; ++j) {
          t[static_cast<std::size_t>(k * b + j)] = static_cast<std::uint8_t>((k + 1) * b + j);
          t[static_cast<std::size_t>((k + 1) * b + j)] = static_cast<std::uint8_t>(k * b + j);
        }
        gens.push_back(t);
      }
      return gens;
    }
    case Kind::Tail: {
      for (int i = a - b; i + 1 < a; ++i)
        if (i >= 0) gens.push_back(adjacent(i));
      return gens;
    }
    case Kind::Joint: {
      for (const auto& p : parts)
        for (auto& g : p.generators()) gens.push_back(g);
      return gens;
    }
  }
  throw std::logic_error("EmbeddingSpec: bad kind");
}

PermGroup EmbeddingSpec::realize() const {
  PermGroup g(ambient_degree(), generators());
  if (g.order() != expected_order())
    throw std::logic_error("EmbeddingSpec: realized order " + std::to_string(g.order()) +
                           " != expected " + std::to_string(expected_order()));
  return g;
}

std::string EmbeddingSpec::to_string() const {
  switch (kind) {
    case Kind::Young:
      return "Young(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::BlockShuffle:
      return "BlockShuffle(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Tail:
      return "Tail(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Joint: {
      std::string s = "Joint(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace sympow
