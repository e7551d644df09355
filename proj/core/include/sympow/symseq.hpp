#ifndef SYMPOW_SYMSEQ_HPP
#define SYMPOW_SYMSEQ_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sympow/gset.hpp"

namespace sympow {

// A symmetric sequence over pointed finite sets: one Σ_m-set per degree 0..M.
struct SymmetricSequence {
  int max_degree = 0;
  std::vector<GSet> levels;
  void validate() const;
};

inline constexpr int kMaxSeqDegree = 8;

SymmetricSequence unit_sequence(int max_degree);
// S(T) = (T^0, T^1, T^2, ...) with the permutation action on factors.
SymmetricSequence free_monoid(const PointedSet& t, int max_degree);

// (X∧Y)_n = ∨_{i+j=n} cor^{Σ_n}_{Σ_i×Σ_j}(X_i ∧ Y_j), with retained per-summand
// cor witnesses so the canonical twist and the slice formulas can be certified.
struct SeqSmashSummand {
  int i = 0, j = 0;
  CorSet cor;
  // W = X_i ∧ Y_j bookkeeping
  std::vector<std::pair<std::uint32_t, std::uint32_t>> wpayload;  // W index -> (x, y)
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> windex;
};
struct SeqSmashLevel {
  std::vector<SeqSmashSummand> summands;
  // combined carrier index -> (summand position, cor carrier index); base maps to itself
  std::vector<std::pair<std::uint32_t, std::uint32_t>> origin;
};
struct SeqSmash {
  SymmetricSequence seq;
  std::vector<SeqSmashLevel> details;
};
SeqSmash seq_smash_detailed(const SymmetricSequence& x, const SymmetricSequence& y);
SymmetricSequence seq_smash(const SymmetricSequence& x, const SymmetricSequence& y);

// Certifies X∧Y ≅ Y∧X per level via the explicit block twist
// (g, (x, y)) -> (g·χ, (y, x)); throws on any failed check.
void certify_seq_smash_commutes(const SymmetricSequence& x, const SymmetricSequence& y);

struct FreeSpectrumSpec {
  int n = 0;
  PointedSet a;  // the object placed at degree n
  PointedSet t;  // the suspension coordinate
};
// F_n(A) = F~_n(A) ∧ S(T), computed by seq_smash from the definition.
SymmetricSequence free_spectrum(const FreeSpectrumSpec& spec, int max_degree);

struct SliceCertificate {
  int n = 0, m = 0;
  GSet definitional;  // (free_spectrum)_m
  GSet closed;        // cor^{Σ_m}_{Σ_{m-n} tail}(A ∧ T^{m-n})
  std::vector<std::uint32_t> bijection;  // definitional -> closed
  bool size_law_ok = false;              // m!/(m-n)! · |A| · |T|^{m-n}
  bool pass = false;
};
SliceCertificate slice_check(const FreeSpectrumSpec& spec, int m);

struct SymSliceCertificate {
  int p = 0, n = 0, m = 0;
  SliceCertificate power_slice;  // the m-slice of F_n(A)^∧p against the machinery
  GSet direct;                   // Σ_p-orbit quotient of the power slice
  GSet closed;                   // cor over Joint(BlockShuffle(p,n), Tail(m, m-pn))
  std::vector<std::uint32_t> bijection;
  bool fibers_ok = false;  // quotient fibers are exactly the Σ_p-orbits
  bool pass = false;
};
SymSliceCertificate sym_slice_check(int p, const FreeSpectrumSpec& spec, int m);

}  // namespace sympow

#endif
