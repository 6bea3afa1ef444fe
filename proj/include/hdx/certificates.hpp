#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"
#include "hdx/error.hpp"
#include "hdx/poset.hpp"
#include "hdx/rational.hpp"

namespace hdx {

class NotACycle : public InvalidArgument {
 public:
  explicit NotACycle(std::size_t index)
      : InvalidArgument("family member " + std::to_string(index) + " is not a cycle"), index_(index) {}
  const char* kind() const noexcept override { return "NotACycle"; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ZeroEvaluation : public InvalidArgument {
 public:
  explicit ZeroEvaluation(std::size_t index)
      : InvalidArgument("cochain evaluates to 0 on family member " + std::to_string(index)), index_(index) {}
  const char* kind() const noexcept override { return "ZeroEvaluation"; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class FillIdentityViolated : public HypothesisFailed {
 public:
  FillIdentityViolated(std::size_t s, int k, std::size_t sigma)
      : HypothesisFailed("fill identity fails at s=" + std::to_string(s) + ", k=" + std::to_string(k) +
                         ", cell " + std::to_string(sigma)),
        s_(s),
        sigma_(sigma) {}
  const char* kind() const noexcept override { return "FillIdentityViolated"; }
  std::size_t s() const noexcept { return s_; }
  std::size_t sigma() const noexcept { return sigma_; }

 private:
  std::size_t s_;
  std::size_t sigma_;
};

class NotHomogeneous : public HypothesisFailed {
 public:
  explicit NotHomogeneous(const std::string& what) : HypothesisFailed(what) {}
  const char* kind() const noexcept override { return "NotHomogeneous"; }
};

// Piercing numbers ---------------------------------------------------------

inline constexpr std::uint64_t kPiercingNodeBudget = std::uint64_t{1} << 24;

struct PiercingResult {
  std::size_t tau = 0;
  std::vector<std::size_t> witness;  ///< sorted ground elements
  std::uint64_t nodes = 0;
};

/// Exact minimum hitting set of a family of subsets of {0..ground-1} by
/// branch and bound. Throws InvalidArgument if some member is empty and
/// BudgetExceeded past `node_budget` search nodes.
PiercingResult piercing_number(const std::vector<std::vector<std::size_t>>& family,
                               std::uint64_t node_budget = kPiercingNodeBudget);

/// Certified lower bound tau({supp alpha_i}) on the cosystolic norm of phi.
/// Each alpha must be a k-cycle with <phi, alpha> = 1.
PiercingResult cycle_detection_bound(const ComplexZ2& x, int k, const BitVec& phi,
                                     const std::vector<BitVec>& cycles,
                                     std::uint64_t node_budget = kPiercingNodeBudget);

/// The tripartite example: n = (k+2) m vertices split into k+2 blocks of m,
/// phi the indicator of the k-simplices transversal to blocks 0..k.
struct TripartiteExample {
  ComplexZ2 complex;  ///< (k+1)-skeleton of the simplex on n vertices
  int k = 0;
  BitVec phi;
  std::vector<BitVec> cycles;  ///< boundaries of transversal (k+1)-simplices with zero block sum mod m
};
TripartiteExample tripartite_example(int k, int m);

// Cochain homotopy ---------------------------------------------------------

/// Chains c_{s,sigma} for sigma in X(k) ((k+1)-chains) and tau in X(k-1)
/// (k-chains). Uniform weights when `weights` is empty.
struct HomotopyScheme {
  ComplexZ2 complex;
  int k = 0;
  std::vector<Rational> weights;
  std::vector<std::vector<BitVec>> upper;  ///< [s][sigma]
  std::vector<std::vector<BitVec>> lower;  ///< [s][tau]

  std::size_t size() const noexcept { return upper.size(); }
};

/// Checks boundary c_{s,sigma} = sigma + sum_j c_{s,sigma_j} for all (s, sigma).
void validate_scheme(const HomotopyScheme& h);
/// delta(tau) = #{(s, sigma) : tau in supp c_{s,sigma}} for tau in X(k+1).
std::vector<std::uint64_t> scheme_delta(const HomotopyScheme& h);
/// 1 / max_tau E[delta_s(tau)], validated first.
Rational homotopy_bound(const HomotopyScheme& h);

/// Cone over `apex` on a simplicial complex: c_{s,sigma} = apex * sigma.
/// Valid wherever the cones exist (e.g. any full simplex skeleton).
HomotopyScheme cone_scheme(const ComplexZ2& x, int k, int apex);

// Geometric lattices --------------------------------------------------------

/// Closes a set of element permutations into a group (identity included).
/// Throws BudgetExceeded beyond `cap` elements.
std::vector<std::vector<std::size_t>> close_group(const std::vector<std::vector<std::size_t>>& generators,
                                                  std::size_t size, std::size_t cap = 20000);

/// The orderings of the atoms of a geometric lattice L indexed by a group S
/// of automorphisms, and the order complex of the proper part.
class LatticeScheme {
 public:
  LatticeScheme(Poset lattice, std::vector<std::vector<std::size_t>> group);

  const Poset& lattice() const noexcept { return lattice_; }
  const ComplexZ2& complex() const noexcept { return complex_; }
  int rank() const noexcept { return rank_; }
  std::size_t group_size() const noexcept { return group_.size(); }

  /// K(b_1..b_m) in C_{m-1} of the proper part; atoms given as lattice
  /// indices. m = 0 gives the empty cell (a vector of length f(-1)).
  BitVec K(const std::vector<std::size_t>& atoms) const;
  /// c_{s,sigma} for sigma a k-cell of the proper part, -1 <= k <= rank-3.
  BitVec chain(std::size_t s, int k, std::size_t sigma) const;
  /// The atom a_{s,i}(sigma), i = 0..k+1.
  std::size_t selector(std::size_t s, int k, std::size_t sigma, int i) const;

  HomotopyScheme scheme(int k) const;
  /// Checks the fill identity for every s and every k-cell, -1 <= k <= rank-3.
  /// Returns the number of (s, sigma) pairs checked.
  std::size_t verify_fill() const;
  /// True if the group acts transitively on the top cells of the proper part.
  bool homogeneous() const;

 private:
  std::vector<std::size_t> chain_vertices(int k, std::size_t sigma) const;

  Poset lattice_;
  std::vector<std::vector<std::size_t>> group_;
  std::vector<std::vector<std::size_t>> inverse_;
  std::vector<std::size_t> kept_;       // proper-part vertex -> lattice element
  std::vector<std::size_t> vertex_of_;  // lattice element -> proper-part vertex or npos
  std::vector<std::size_t> atoms_;
  ComplexZ2 complex_;
  int rank_ = 0;
};

struct LatticeBound {
  Rational formula;         ///< f_{n-2} / (f_{n-3} * sum_{j=1}^{n-1} j!)
  Rational scheme_bound;    ///< |S| / max delta from the automorphism scheme
  std::size_t group_size = 0;
};

/// Requires a homogeneous geometric lattice of rank >= 3; throws
/// NotHomogeneous otherwise.
LatticeBound lattice_bound(const Poset& lattice, const std::vector<std::vector<std::size_t>>& generators,
                           std::size_t cap = 20000);

}  // namespace hdx
