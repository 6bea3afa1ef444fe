#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/gf2.hpp"

namespace hdx {

struct Cell {
  std::string label;
  std::vector<std::size_t> boundary;  ///< indices into the (dim-1) list, odd incidence only
};

/// Graded cell complex with Z2 incidence. Dimension -1 holds the empty cell,
/// which exists iff reduced(); every vertex then has it as its boundary.
/// A complex with no cells and reduced() == false is the void complex, one
/// with no cells and reduced() == true is {empty}.
class ComplexZ2 {
 public:
  ComplexZ2() = default;
  /// cells[k] lists the k-cells. Validates indices, distinct labels and dd = 0.
  ComplexZ2(std::string name, std::vector<std::vector<Cell>> cells, bool reduced = true);

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  bool reduced() const noexcept { return reduced_; }
  ComplexZ2 with_reduced(bool reduced) const;

  /// -1 when there are no cells.
  int top_dim() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  std::size_t f(int k) const noexcept;
  std::vector<std::size_t> f_vector() const;
  std::size_t total_cells() const noexcept;
  bool has_empty_cell() const noexcept { return reduced_; }

  const std::vector<Cell>& cells(int k) const;
  const Cell& cell(int k, std::size_t i) const { return cells(k)[i]; }
  std::optional<std::size_t> find(int k, std::string_view label) const;

  /// True when every label is an increasing vertex tuple "a,b,c" of length k+1.
  bool is_simplicial() const noexcept { return simplicial_; }
  /// Vertex tuple of a simplicial cell.
  const std::vector<int>& simplex(int k, std::size_t i) const;

  /// Rows are k-cells, each row the boundary over (k-1)-cells. For k = 0 the
  /// rows have length f(-1).
  GF2Matrix boundary_matrix(int k) const;
  /// Rows are k-cells (k >= -1), each row the set of (k+1)-cells containing it.
  GF2Matrix coboundary_matrix(int k) const;
  BitVec boundary(int k, const BitVec& chain) const;
  BitVec coboundary(int k, const BitVec& cochain) const;
  /// For each k-cell the (k+1)-cells having it as a face.
  std::vector<std::vector<std::size_t>> cofaces(int k) const;

  /// Every cell lies in some top_dim()-cell.
  bool is_pure() const;

  friend bool operator==(const ComplexZ2& a, const ComplexZ2& b);

 private:
  void index_and_validate();

  std::string name_;
  std::vector<std::vector<Cell>> cells_;
  bool reduced_ = false;
  bool simplicial_ = false;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
  std::vector<std::vector<std::vector<int>>> simplices_;
};

/// A subcomplex Y of X recorded as per-dimension masks. Chain and cochain
/// spaces of the pair live on the unmasked cells.
class RelativePair {
 public:
  RelativePair() = default;
  /// Y = void.
  RelativePair(ComplexZ2 ambient);  // NOLINT(google-explicit-constructor)
  /// masks[k + 1] marks the k-cells of Y for k = -1..top_dim. Throws
  /// NotASubcomplex when Y is not closed under boundary.
  RelativePair(ComplexZ2 ambient, std::vector<BitVec> masks);
  /// Y given as a complex matched by labels; its empty cell is present iff it
  /// is reduced or nonempty.
  static RelativePair from_subcomplex(ComplexZ2 ambient, const ComplexZ2& sub);

  const ComplexZ2& ambient() const noexcept { return ambient_; }
  int top_dim() const noexcept { return ambient_.top_dim(); }
  bool in_sub(int k, std::size_t i) const;
  std::size_t f(int k) const;
  std::vector<std::size_t> f_vector() const;
  /// Ambient indices of the unmasked k-cells, increasing.
  const std::vector<std::size_t>& free_cells(int k) const;
  GF2Matrix boundary_matrix(int k) const;
  GF2Matrix coboundary_matrix(int k) const;
  const BitVec& mask(int k) const { return masks_[static_cast<std::size_t>(k + 1)]; }

 private:
  void build();

  ComplexZ2 ambient_;
  std::vector<BitVec> masks_;
  std::vector<std::vector<std::size_t>> free_;
  std::vector<std::vector<std::size_t>> position_;  // ambient index -> free position or npos
};

// Labels -------------------------------------------------------------------

std::string simplex_label(const std::vector<int>& vertices);
/// Parses "a,b,c" into an increasing tuple; nullopt when malformed.
std::optional<std::vector<int>> parse_simplex_label(std::string_view label);

// Builders -----------------------------------------------------------------

/// Closure under faces of the given simplices; cells ordered lexicographically.
ComplexZ2 simplicial_closure(std::string name, const std::vector<std::vector<int>>& simplices,
                             bool reduced = true);
/// All subsets of {0..n-1} of size <= k+1.
ComplexZ2 simplex_skeleton(int n, int k);
/// Cube complex of [-1,1]^d with cells as words over - + *.
ComplexZ2 hypercube(int d);
/// X x Delta^{n-1} with labels "alpha|beta".
ComplexZ2 product_with_simplex(const ComplexZ2& x, int n);
/// {sigma subset of [n] : complement(sigma) not in X}.
ComplexZ2 alexander_dual(const ComplexZ2& x, int n);
/// The pair (Delta_n, X^dual), Delta_n the full simplex on [n] with [n] itself.
RelativePair duality_pair(const ComplexZ2& x, int n);
/// The map sending a k-cell sigma of X to the cell [n] \ sigma of the pair,
/// as a vector over the free (n-k-2)-cells.
BitVec duality_map(const ComplexZ2& x, const RelativePair& pair, int n, int k, const BitVec& c);
/// Full 1-skeleton on n vertices plus each triangle with probability p.
ComplexZ2 random_Ynp(int n, double p, std::uint64_t seed);
/// Closure of a random family of subsets of [n] (each nonempty subset of size
/// <= max_size chosen with probability p).
ComplexZ2 random_subcomplex(int n, double p, int max_size, std::uint64_t seed);

/// Coxeter complex of type A_{n-1}: order complex of the proper nonempty
/// subsets of [n]. Facets are indexed by permutations.
ComplexZ2 coxeter_An(int n);
/// Coxeter complex of type B_n: chains of nonempty signed subsets of [n].
ComplexZ2 coxeter_Bn(int n);

/// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace hdx
