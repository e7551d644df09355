#ifndef SYMPOW_SSET_HPP
#define SYMPOW_SSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sympow {

// A finite pointed simplicial set, stored densely level by level up to dim_bound.
// Identifiers are totally ordered (byte order) and every level is kept sorted, so
// equal constructions produce byte-identical objects.
class PointedSimplicialSet {
 public:
  int dim_bound() const { return dim_bound_; }
  // Largest level carrying a non-degenerate non-basepoint simplex, when the
  // construction certifies that no higher level (stored or not) carries one.
  // -1 means "no non-degenerate non-basepoint simplex at all" (the point).
  std::optional<int> geometric_dim() const { return geometric_dim_; }

  const std::vector<std::string>& ids(int m) const { return ids_[static_cast<std::size_t>(m)]; }
  const std::string& id(int m, std::uint32_t x) const { return ids_[static_cast<std::size_t>(m)][x]; }
  std::uint32_t basepoint(int m) const { return base_[static_cast<std::size_t>(m)]; }
  std::size_t size(int m) const { return ids_[static_cast<std::size_t>(m)].size(); }
  std::size_t reduced_size(int m) const { return size(m) - 1; }
  std::uint32_t index_of(int m, const std::string& id) const;  // throws if absent
  std::optional<std::uint32_t> find(int m, const std::string& id) const;

  // d_i: level m -> level m-1 (1 <= m <= dim_bound, 0 <= i <= m)
  std::uint32_t face(int m, int i, std::uint32_t x) const {
    return faces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)][x];
  }
  // s_i: level m -> level m+1 (0 <= m < dim_bound, 0 <= i <= m)
  std::uint32_t degeneracy(int m, int i, std::uint32_t x) const {
    return degens_[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)][x];
  }
  bool is_degenerate(int m, std::uint32_t x) const {
    return degenerate_[static_cast<std::size_t>(m)][x];
  }
  // number of non-degenerate non-basepoint simplices at level m
  std::size_t nondegenerate_reduced_count(int m) const;

  // Checks every stored simplicial identity and that the basepoint is absorbing.
  void validate() const;

  bool operator==(const PointedSimplicialSet& o) const;

  struct Raw {
    int dim_bound = 0;
    // per level: ids with the basepoint at position 0
    std::vector<std::vector<std::string>> ids;
    // faces[m][i] defined for 1 <= m <= dim_bound; degens[m][i] for m < dim_bound
    std::vector<std::vector<std::vector<std::uint32_t>>> faces;
    std::vector<std::vector<std::vector<std::uint32_t>>> degens;
    // upper bound on the geometric dimension guaranteed by the construction
    std::optional<int> claimed_geom_bound;
  };
  struct FinalizeResult;
  // Sorts ids, remaps all tables, computes degeneracy flags and geometric_dim,
  // and validates. The returned permutation maps provisional to final indices.
  static FinalizeResult finalize(Raw raw);

 private:
  int dim_bound_ = 0;
  std::optional<int> geometric_dim_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::uint32_t> base_;
  std::vector<std::vector<std::vector<std::uint32_t>>> faces_;
  std::vector<std::vector<std::vector<std::uint32_t>>> degens_;
  std::vector<std::vector<bool>> degenerate_;
};

struct PointedSimplicialSet::FinalizeResult {
  PointedSimplicialSet sset;
  std::vector<std::vector<std::uint32_t>> new_index;  // per level: provisional -> final
};

struct SimplicialMap {
  PointedSimplicialSet source, target;
  std::vector<std::vector<std::uint32_t>> comp;  // per level

  std::uint32_t apply(int m, std::uint32_t x) const {
    return comp[static_cast<std::size_t>(m)][x];
  }
  // commutes with all stored faces and degeneracies, sends basepoint to basepoint
  void validate() const;
  bool levelwise_injective() const;
};

// A levelwise-injective pointed simplicial map: the artifact's cofibration.
struct Inclusion {
  SimplicialMap map;
  explicit Inclusion(SimplicialMap m);  // throws "not an inclusion"
};

PointedSimplicialSet point_space(int dim_bound);
// Delta^n/boundary: monotone surjections [m] -> [n]; throws "bound below geometric dimension".
PointedSimplicialSet sphere(int n, int dim_bound);
// Delta^1 pointed at vertex 1 (used by cone)
PointedSimplicialSet interval_one_pointed(int dim_bound);
PointedSimplicialSet truncate(const PointedSimplicialSet& x, int dim_bound);

PointedSimplicialSet wedge(const PointedSimplicialSet& x, const PointedSimplicialSet& y);
PointedSimplicialSet smash(const PointedSimplicialSet& x, const PointedSimplicialSet& y);
PointedSimplicialSet smash_power(const PointedSimplicialSet& x, int n);
PointedSimplicialSet sym_power(int n, const PointedSimplicialSet& x);
SimplicialMap sym_power_map(int n, const SimplicialMap& f);
PointedSimplicialSet suspend(const PointedSimplicialSet& x);

struct ConeResult {
  PointedSimplicialSet cone;
  Inclusion inclusion;  // X at cylinder vertex 0
};
ConeResult cone(const PointedSimplicialSet& x);

struct QuotientResult {
  PointedSimplicialSet quotient;
  SimplicialMap projection;
};
QuotientResult quotient_by_subobject(const Inclusion& j);

Inclusion identity_inclusion(const PointedSimplicialSet& x);
Inclusion basepoint_inclusion(const PointedSimplicialSet& x);
// X into the left summand of X v Y
Inclusion wedge_left_inclusion(const PointedSimplicialSet& x, const PointedSimplicialSet& y);

}  // namespace sympow

#endif
