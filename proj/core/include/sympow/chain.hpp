#ifndef SYMPOW_CHAIN_HPP
#define SYMPOW_CHAIN_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympow/sset.hpp"

namespace sympow {

using Int = mpz_class;

// Dense integer matrix, row-major. Everything is exact.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  bool is_zero() const;
  bool operator==(const IntMat&) const = default;

  IntMat mul(const IntMat& o) const;
  IntMat hstack(const IntMat& o) const;  // [this | o], rows must match
  IntMat column(std::size_t c) const;
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct SmithResult {
  IntMat s;                          // diagonal, d_1 | d_2 | ..., entries >= 0
  IntMat u, v;                       // unimodular witnesses with u * m * v = s
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries
  std::size_t rank = 0;
};
// Deterministic pivoting: smallest nonzero absolute value, ties broken row-major.
SmithResult smith_normal_form(const IntMat& m, bool with_witnesses = true);

// Columns form a basis of ker(m) as a direct summand of Z^cols.
IntMat kernel_basis(const IntMat& m);
// Integer solution x of m x = b for every column of b, if one exists.
std::optional<IntMat> solve_columns(const IntMat& m, const IntMat& b);

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2", ...
};

// Bounded complex of finitely generated abelian groups with homological grading:
// d[k]: C_k -> C_{k-1}. Each term is presented as Z^{labels_k} / im(rel_k); a free
// term has an empty relation block.
struct ChainComplexZ {
  int lo = 0, hi = -1;
  std::vector<std::vector<std::string>> labels;  // per degree lo..hi
  std::vector<IntMat> d;                         // d[k-lo]: dim_{k-1} x dim_k (dim_{lo-1} = 0)
  std::vector<IntMat> rel;                       // rel[k-lo]: dim_k x (#relations)

  std::size_t dim(int k) const;
  const IntMat& diff(int k) const { return d[static_cast<std::size_t>(k - lo)]; }
  const IntMat& relations(int k) const { return rel[static_cast<std::size_t>(k - lo)]; }
  bool free() const;
  // d∘d lands in the collapsed subgroup (identically zero in the free case),
  // and the differential descends to the presented quotients.
  void validate() const;
};

ChainComplexZ free_complex(int lo, std::vector<std::vector<std::string>> labels,
                           std::vector<IntMat> d);

std::map<int, HomologyGroup> homology(const ChainComplexZ& c);
HomologyGroup homology_at(const ChainComplexZ& c, int k);
bool acyclic(const ChainComplexZ& c);
std::string homology_table(const std::map<int, HomologyGroup>& h);  // "H_4 = Z" lines

// Reduced normalized chains: degree-m basis = non-degenerate non-basepoint
// m-simplices, boundary sums (-1)^i d_i with degenerate or basepoint faces dropped.
// Throws "truncation insufficient" when the level data cannot certify degree k.
ChainComplexZ normalized_chains(const PointedSimplicialSet& x, int through_degree);

// Reduced Euler characteristic by simplex count. Requires geometric_dim known.
Int euler(const PointedSimplicialSet& x);
// The same number from homology ranks (the independent route).
Int euler_via_homology(const PointedSimplicialSet& x);
// All reduced homology of x vanishes (through the geometric dimension).
bool acyclic_space(const PointedSimplicialSet& x);
std::map<int, HomologyGroup> space_homology(const PointedSimplicialSet& x, int through_degree = -1);

}  // namespace sympow

#endif
