#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"

namespace hdx {

inline constexpr std::size_t kNoElement = static_cast<std::size_t>(-1);

/// Finite poset given by a strict order relation (transitively closed on
/// construction). Elements keep the caller's indices.
class Poset {
 public:
  Poset() = default;
  /// relations are pairs (a, b) meaning a < b. Throws InvalidArgument on a cycle.
  Poset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool less(std::size_t a, std::size_t b) const { return above_[a].test(b); }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
  bool covers(std::size_t a, std::size_t b) const;  ///< b covers a
  const BitVec& up_set(std::size_t a) const { return above_[a]; }

  /// Length of the longest chain ending at a (minimal elements have rank 0).
  int rank(std::size_t a) const { return rank_[a]; }
  int height() const noexcept;
  bool is_graded() const;

  std::size_t bottom() const;  ///< unique minimum or kNoElement
  std::size_t top() const;     ///< unique maximum or kNoElement
  std::size_t join(std::size_t a, std::size_t b) const;  ///< least upper bound or kNoElement
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> atoms() const;  ///< covers of the bottom

  bool is_lattice() const;
  /// Graded lattice, atomic, and semimodular (r(a)+r(b) >= r(a v b)+r(a ^ b)).
  bool is_geometric_lattice() const;

  /// Drops bottom and top; `kept` receives the original index of each element.
  Poset proper_part(std::vector<std::size_t>* kept = nullptr) const;
  /// Induced subposet on `elements` (in that order).
  Poset induced(const std::vector<std::size_t>& elements) const;

  /// Is `perm` (element -> element) an order automorphism?
  bool is_automorphism(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<std::string> labels_;
  std::vector<BitVec> above_;
  std::vector<int> rank_;
};

/// Simplices are the chains of p, labelled by sorted element indices.
ComplexZ2 order_complex(const Poset& p, std::string name = "order_complex");

Poset chain_poset(std::size_t m);
Poset antichain_poset(std::size_t m);
/// All subsets of [n] by inclusion; element index = bitmask.
Poset boolean_lattice(int n);
/// Subspaces of F_q^n by inclusion, q in {2,3}, 2 <= n <= 4, ordered by
/// (dimension, sorted member codes). Vectors are coded base q.
Poset subspace_lattice(int q, int n);

/// Automorphism generators (as element permutations) of the lattices above:
/// adjacent transpositions for the Boolean lattice, elementary matrices and
/// scalings for the subspace lattice.
std::vector<std::vector<std::size_t>> boolean_lattice_generators(int n);
std::vector<std::vector<std::size_t>> subspace_lattice_generators(int q, int n);

}  // namespace hdx
