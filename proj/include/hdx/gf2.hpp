#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hdx/bitvec.hpp"

namespace hdx {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
  /// All rows must have length cols.
  GF2Matrix(std::size_t cols, std::vector<BitVec> rows);
  static GF2Matrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVec>& row_list() const noexcept { return rows_; }
  bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  void append_row(BitVec row);

  GF2Matrix transpose() const;
  /// Sum of the rows selected by `combo` (length rows()): combo^T * M.
  BitVec combine_rows(const BitVec& combo) const;
  /// M * v for v of length cols().
  BitVec apply(const BitVec& v) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct RowReduction {
  GF2Matrix reduced;                ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  ///< strictly increasing pivot columns
  std::size_t rank = 0;
};

RowReduction row_reduce(const GF2Matrix& m);
std::size_t rank(const GF2Matrix& m);
bool in_row_space(const GF2Matrix& m, const BitVec& v);

/// A coset rep + span(basis) of an ambient Z2 space.
struct CosetProblem {
  std::size_t ambient_dim = 0;
  GF2Matrix basis;  ///< linearly independent rows
  BitVec rep;

  /// Validates the invariants (lengths, independence). Throws InvalidArgument.
  void validate() const;
};

struct CosetMinimum {
  std::size_t weight = 0;
  BitVec witness;
  std::uint64_t visited = 0;
};

/// Minimum weight over the 2^rank coset members by Gray-code enumeration.
/// Ties go to the lexicographically smallest member. Throws BudgetExceeded
/// when 2^rank > budget.
CosetMinimum coset_min_weight(const CosetProblem& p, std::uint64_t budget = kDefaultBudget,
                              unsigned threads = 1);

/// Yields one representative per coset of span(basis), supported on the
/// non-pivot coordinates, in lexicographic order starting at zero.
class CosetRepStream {
 public:
  CosetRepStream(std::size_t ambient_dim, const GF2Matrix& basis);

  /// Number of cosets, 2^(ambient - rank); saturates at 2^63.
  std::uint64_t count() const noexcept;
  bool next(BitVec& out);

 private:
  std::size_t ambient_;
  std::vector<std::size_t> free_;
  std::uint64_t index_ = 0;
  bool done_ = false;
};

/// Quotient of an ambient Z2 space by the span of a (possibly dependent) row
/// list. Cosets are encoded as q-bit syndromes where bit (q-1-j) is the j-th
/// non-pivot ("free") coordinate; increasing syndromes enumerate canonical
/// representatives in lexicographic order.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(std::size_t ambient_dim, const GF2Matrix& spanning_rows);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rref_.rank; }
  std::size_t quotient_dim() const noexcept { return free_.size(); }
  const GF2Matrix& basis() const noexcept { return rref_.reduced; }
  const std::vector<std::size_t>& pivots() const noexcept { return rref_.pivots; }
  const std::vector<std::size_t>& free_coords() const noexcept { return free_; }

  /// Canonical representative of v + span.
  BitVec reduce(const BitVec& v) const;
  bool contains(const BitVec& v) const { return reduce(v).none(); }
  /// Requires quotient_dim() <= 64.
  std::uint64_t syndrome(const BitVec& v) const;
  BitVec representative(std::uint64_t syndrome) const;
  /// Syndrome of the unit vector at each coordinate.
  std::vector<std::uint64_t> unit_syndromes() const;

  CosetProblem coset(const BitVec& v) const { return {ambient_, basis(), reduce(v)}; }

 private:
  std::size_t ambient_ = 0;
  RowReduction rref_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> pivot_row_;  // coordinate -> row index in basis, or npos
};

/// Minimum coset weight for every coset of a quotient, computed by BFS over
/// syndromes with the unit vectors as generators. Memory is 2^q bytes.
class CosetLeaderTable {
 public:
  static constexpr unsigned kMaxQuotientDim = 30;

  CosetLeaderTable(const QuotientSpace& space, std::uint64_t budget = kDefaultBudget);

  std::size_t quotient_dim() const noexcept { return q_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << q_; }
  unsigned weight(std::uint64_t syndrome) const { return dist_[syndrome]; }
  unsigned max_weight() const noexcept { return max_weight_; }
  /// A minimum-weight member, reconstructed along BFS parents (deterministic,
  /// not necessarily lexicographically smallest).
  BitVec leader(std::uint64_t syndrome) const;

 private:
  const QuotientSpace* space_;
  unsigned q_;
  std::vector<std::uint64_t> gens_;
  std::vector<std::uint8_t> dist_;
  unsigned max_weight_ = 0;
};

/// Minimum weight of v + span, choosing whichever exact route (member scan or
/// quotient table) is cheaper. Witness is the lexicographically smallest
/// minimum-weight member when the member scan fits the budget.
CosetMinimum coset_min_weight_auto(const QuotientSpace& space, const BitVec& v,
                                   std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

}  // namespace hdx
