#ifndef SYMPOW_PERM_HPP
#define SYMPOW_PERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sympow {

// A permutation of {0,...,n-1} stored as its image table: p[i] is the image of i.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(int degree);
bool perm_is_valid(const Perm& p);
bool perm_is_identity(const Perm& p);
// (p*q)(i) = p(q(i))
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
// One-line notation, 1-based: the permutation (0->1, 1->0, 2->2) prints as "2 1 3".
std::string perm_one_line(const Perm& p);
// a acting on the first |a| letters, b on the remaining |b|.
Perm perm_block_sum(const Perm& a, const Perm& b);
// Rearranges consecutive blocks of the given sizes: block k is moved to slot tau(k),
// each block kept in order. The result permutes sum(sizes) letters.
Perm perm_block_rearrange(const Perm& tau, const std::vector<int>& sizes);
// Left action on position tuples: (p . t)[p(k)] = t[k].
template <typename T>
std::vector<T> perm_apply(const Perm& p, const std::vector<T>& tuple) {
  std::vector<T> out(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k) out[p[k]] = tuple[k];
  return out;
}

// Groups are stored by full element lists; everything downstream enumerates.
inline constexpr int kMaxPermDegree = 10;

class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  // Enumerates the subgroup of Sigma_degree generated by the given permutations.
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  // Sorted lexicographically by image table.
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

  std::size_t identity_index() const { return identity_index_; }
  std::optional<std::size_t> find(const Perm& p) const;
  std::size_t index_of(const Perm& p) const;  // throws if absent
  bool contains(const Perm& p) const;
  std::size_t compose(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool same_elements(const PermGroup& g) const;

 private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> generator_indices_;
  std::size_t identity_index_ = 0;
};

PermGroup symmetric_group(int degree);
PermGroup trivial_group(int degree);

// Named embeddings of products of symmetric groups into an ambient Sigma_m.
//   Young(a, b):        Sigma_a x Sigma_b on the blocks {1..a}, {a+1..a+b} of Sigma_{a+b}
//   BlockShuffle(p, n): Sigma_p permuting p consecutive blocks of size n inside Sigma_{p*n}
//   Tail(m, k):         Sigma_k on the last k letters of Sigma_m
//   Joint:              subgroup generated by the parts (shared ambient degree)
struct EmbeddingSpec {
  enum class Kind { Young, BlockShuffle, Tail, Joint };
  Kind kind = Kind::Tail;
  int a = 0;
  int b = 0;
  std::vector<EmbeddingSpec> parts;

  static EmbeddingSpec young(int a, int b);
  static EmbeddingSpec block_shuffle(int p, int n);
  static EmbeddingSpec tail(int m, int k);
  static EmbeddingSpec joint(std::vector<EmbeddingSpec> parts);

  int ambient_degree() const;
  unsigned long expected_order() const;
  std::vector<Perm> generators() const;
  // Enumerates the subgroup; throws if the order differs from expected_order().
  PermGroup realize() const;
  std::string to_string() const;
};

}  // namespace sympow

#endif
