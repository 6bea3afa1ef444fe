#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"
#include "hdx/gf2.hpp"
#include "hdx/rational.hpp"

namespace hdx {

/// co: cochains, coboundaries, cosystoles. ho: chains, boundaries, systoles.
enum class Mode { kCo, kHo };

const char* mode_name(Mode m) noexcept;

/// The data of one degree k of a (relative) chain complex, in one mode:
/// the ambient space C, the subspace B to quotient by, and the operator T
/// whose kernel contains B (d_k for co, boundary_k for ho).
struct DegreeData {
  int k = 0;
  Mode mode = Mode::kCo;
  std::size_t dim = 0;       ///< f_k of the pair
  std::size_t target = 0;    ///< dimension of the codomain of T
  QuotientSpace quotient;    ///< C / B
  std::vector<BitVec> image;  ///< T applied to each unit vector of C
};

DegreeData degree_data(const RelativePair& x, int k, Mode mode);

/// T applied to a vector of C.
BitVec apply_operator(const DegreeData& d, const BitVec& v);

struct NormResult {
  std::size_t value = 0;
  BitVec form;  ///< a member of v + B of minimum weight
  std::uint64_t visited = 0;
};

NormResult cosystolic_norm(const RelativePair& x, int k, const BitVec& phi, std::uint64_t budget = kDefaultBudget,
                           unsigned threads = 1);
NormResult systolic_norm(const RelativePair& x, int k, const BitVec& c, std::uint64_t budget = kDefaultBudget,
                         unsigned threads = 1);

struct ExpansionResult {
  int k = 0;
  Mode mode = Mode::kCo;
  Rational value;
  BitVec witness;  ///< minimum-weight member of the optimal coset
  std::size_t numerator_norm = 0;
  std::size_t denominator_norm = 0;
  std::uint64_t witness_syndrome = 0;
  std::size_t quotient_dim = 0;
  std::uint64_t budget_used = 0;
  std::vector<std::size_t> f_vector;
};

/// Exact h^k (co) or h_k (ho) of a pair. Minimum over the nonzero cosets of
/// ||T v|| / ||v + B||, ties to the smaller numerator, then the
/// lexicographically smaller canonical representative. Throws DegenerateSpace
/// when C = B and BudgetExceeded when 2^(dim C/B) exceeds the budget.
ExpansionResult cheeger(const RelativePair& x, int k, Mode mode, std::uint64_t budget = kDefaultBudget,
                        unsigned threads = 1);
inline ExpansionResult cheeger_co(const RelativePair& x, int k, std::uint64_t budget = kDefaultBudget,
                                  unsigned threads = 1) {
  return cheeger(x, k, Mode::kCo, budget, threads);
}
inline ExpansionResult cheeger_ho(const RelativePair& x, int k, std::uint64_t budget = kDefaultBudget,
                                  unsigned threads = 1) {
  return cheeger(x, k, Mode::kHo, budget, threads);
}

struct MaxCosystole {
  std::size_t lambda = 0;
  BitVec witness;
  std::uint64_t budget_used = 0;
};

/// Covering radius of B^k in C^k: the largest cosystolic norm of a k-cochain.
MaxCosystole max_cosystole(const RelativePair& x, int k, std::uint64_t budget = kDefaultBudget);

/// dim H^k over Z2 (equal to dim H_k).
std::size_t cohomology_dim(const RelativePair& x, int k);

// Closed-form bounds -------------------------------------------------------

struct BlamBound {
  Enclosure lower;  ///< (1 - 20 sqrt(f_{k-1}/f_k)) f_k / 2
  Rational upper;   ///< f_k / 2
  bool vacuous = false;  ///< lower.hi <= 0
};
BlamBound bound_blam(std::uint64_t f_k, std::uint64_t f_km1);

struct UphkBound {
  Enclosure value;  ///< (1 + 50 sqrt(k+1)/sqrt(D)) D/(k+2)
  bool hypothesis_holds = false;  ///< D >= 1600 (k+1)
};
UphkBound bound_uphk(std::uint64_t D, int k);

/// min{h, max{1, n/(k+2)}}; an absent h stands for +infinity.
Rational bound_prod(const std::optional<Rational>& h, int n, int k);

struct ProductBoundReport {
  std::optional<Rational> h_x;  ///< absent when C^k(X) = B^k(X)
  Rational h_product;
  Rational bound;
  bool holds = false;
};
ProductBoundReport verify_product_bound(const ComplexZ2& x, int n, int k, std::uint64_t budget = kDefaultBudget);

}  // namespace hdx
