#ifndef SYMPOW_CHAIN_SYM_HPP
#define SYMPOW_CHAIN_SYM_HPP

#include <map>
#include <string>
#include <vector>

#include "sympow/chain.hpp"

namespace sympow {

// Bounded free cochain complex: d[q-lo] is the matrix of D^q: C^q -> C^{q+1}.
// Degrees are reported verbatim (the paper's example lives in degrees -1, 0).
struct Cochain {
  int lo = 0, hi = -1;
  std::vector<std::vector<std::string>> labels;
  std::vector<IntMat> d;

  std::size_t dim(int q) const;
  const IntMat& diff(int q) const { return d[static_cast<std::size_t>(q - lo)]; }
  void validate() const;  // shapes and D∘D = 0
};

Cochain cochain_unit();            // Z concentrated in degree 0
Cochain cochain_two_term(int lo);  // Z --id--> Z in degrees lo, lo+1
// The paper's counterexample complex: Z --id--> Z in degrees -1, 0.
Cochain paper_example_complex();

// Total tensor product with the Koszul differential d(x⊗y) = dx⊗y + (-1)^p x⊗dy.
Cochain total_tensor(const Cochain& x, const Cochain& y);

// Cochain complex with degreewise relation presentations (coinvariants can carry torsion).
struct PresentedCochain {
  int lo = 0, hi = -1;
  std::vector<std::vector<std::string>> labels;
  std::vector<IntMat> d;
  std::vector<IntMat> rel;

  std::size_t dim(int q) const;
  // cohomology of the presented complex, keyed by the verbatim degree
  std::map<int, HomologyGroup> homology() const;
  void validate() const;
};

PresentedCochain presented_of(const Cochain& x);

// Matrix of the adjacent transposition (j, j+1) acting on degree `degree` of X^{⊗n}
// with the Koszul sign (-1)^{pq}.
IntMat koszul_transposition(const Cochain& x, int n, int j, int degree);

// Degreewise coinvariants of X^{⊗n} under the signed permutation action.
// Checks the involution/braid/commutation relations on the generator matrices and
// that the differential descends; throws if any fails.
PresentedCochain sym_naive(int n, const Cochain& x);

// The induced degreewise map Sym^n(f) on ambient tensor words for a degreewise
// chain map f (per-degree matrices, indexed lo..hi of x into y).
std::vector<IntMat> tensor_power_map(int n, const Cochain& x, const Cochain& y,
                                     const std::vector<IntMat>& f);
// Coinvariants are right exact: for degreewise-surjective f the induced map on
// sym_naive is degreewise surjective. Returns the verdict for the given f.
bool sym_naive_map_surjective(int n, const Cochain& x, const Cochain& y,
                              const std::vector<IntMat>& f);

struct ChainContrastReport {
  bool input_acyclic = false;
  bool sym2_nontrivial = false;
  std::map<int, HomologyGroup> input_homology;
  std::map<int, HomologyGroup> sym2_homology;
  bool pass() const { return input_acyclic && sym2_nontrivial; }
};
// The executable witness that simpliciality matters: the input is acyclic while
// its naive symmetric square is not.
ChainContrastReport contrast_report(const Cochain& x);

}  // namespace sympow

#endif
