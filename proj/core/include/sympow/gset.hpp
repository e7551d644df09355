#ifndef SYMPOW_GSET_HPP
#define SYMPOW_GSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympow/perm.hpp"

namespace sympow {

// Finite pointed set with canonically sorted identifiers.
struct PointedSet {
  std::vector<std::string> ids;  // sorted ascending, unique
  std::uint32_t base = 0;        // index of the basepoint id

  std::size_t size() const { return ids.size(); }
  std::size_t reduced_size() const { return ids.size() - 1; }
  std::uint32_t index_of(const std::string& id) const;  // throws if absent
  bool operator==(const PointedSet&) const = default;
};

// Sorts the ids (basepoint id included) and returns the canonical pointed set.
PointedSet make_pointed_set(std::vector<std::string> nonbase_ids, const std::string& base_id = "*");

// A finite pointed G-set: permutation group, carrier, dense action table.
struct GSet {
  PermGroup group;
  PointedSet carrier;
  std::vector<std::vector<std::uint32_t>> action;  // action[g][x]

  std::uint32_t act(std::size_t g, std::uint32_t x) const { return action[g][x]; }
  // Identity acts as identity, generator-closure of associativity, basepoint fixed,
  // every row a bijection. Throws on violation.
  void validate() const;
  std::vector<std::uint32_t> orbit_of(std::uint32_t x) const;     // sorted
  std::vector<std::size_t> stabilizer_of(std::uint32_t x) const;  // element indices, sorted
};

GSet trivial_gset(const PermGroup& g, const PointedSet& carrier);

struct OrbitQuotient {
  PointedSet orbits;                          // ids are the lexicographically minimal member ids
  std::vector<std::uint32_t> projection;      // carrier index -> orbit index
  std::vector<std::uint32_t> representative;  // orbit index -> carrier index
};
OrbitQuotient orbit_quotient(const GSet& a);

// Corestriction cor^G_H(X): the H-orbit quotient of G x X under h(g,x) = (g h^{-1}, h x),
// carrying the left G-action. X must be a GSet over realize(h) inside G.
struct CorSet {
  GSet gset;
  // For each carrier element: the canonical (g index in G, x index in X) pair;
  // the basepoint holds (identity, X basepoint).
  std::vector<std::pair<std::size_t, std::uint32_t>> rep;
  std::uint32_t class_of(std::size_t g, std::uint32_t x) const;

  // internal: orbit lookup table indexed by g * |X| + x
  std::vector<std::uint32_t> class_table_;
  std::size_t carrier_size_ = 0;
};
CorSet cor_with_witness(const PermGroup& g, const EmbeddingSpec& h, const GSet& x);
GSet cor(const PermGroup& g, const EmbeddingSpec& h, const GSet& x);
// Restriction res^G_H(Y): same carrier, action restricted along the embedding.
GSet res(const PermGroup& g, const EmbeddingSpec& h, const GSet& y);

// All pointed equivariant maps A -> B as index tables over A.carrier.
// Both G-sets must share the same element list. Throws "size over cap" past the bound.
inline constexpr std::size_t kHomEnumerationCap = 6;
std::vector<std::vector<std::uint32_t>> equivariant_maps(const GSet& a, const GSet& b);

struct AdjunctionReport {
  std::size_t lhs_count = 0;  // |Hom_G(cor X, Y)|
  std::size_t rhs_count = 0;  // |Hom_H(X, res Y)|
  bool unit_bijection_ok = false;
  bool counit_roundtrip_ok = false;
  // witness: lhs map index -> rhs map index under F |-> F(e, -)
  std::vector<std::uint32_t> pairing;
  bool pass() const { return lhs_count == rhs_count && unit_bijection_ok && counit_roundtrip_ok; }
};
AdjunctionReport adjunction_check(const PermGroup& g, const EmbeddingSpec& h, const GSet& x,
                                  const GSet& y);

// Explicit pointed G-equivariant bijection A -> B, if one exists (index table over A.carrier).
std::optional<std::vector<std::uint32_t>> find_equivariant_bijection(const GSet& a, const GSet& b);
bool verify_equivariant_bijection(const GSet& a, const GSet& b,
                                  const std::vector<std::uint32_t>& f);

}  // namespace sympow

#endif
