#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"
#include "hdx/gf2.hpp"

namespace hdx {

/// Finite group given by its multiplication table; elements are 0..order-1.
class FiniteGroup {
 public:
  /// Validates closure, identity and inverses exactly, and associativity
  /// exhaustively up to order 24 (sampled with a fixed seed above).
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t m);
  static FiniteGroup symmetric(int n);  ///< n <= 5
  static FiniteGroup alternating5();
  static FiniteGroup psl27();
  /// Group generated by permutations of {0..degree-1}; elements sorted
  /// lexicographically, so the identity is element 0.
  static FiniteGroup from_permutations(std::string name, const std::vector<std::vector<int>>& generators,
                                       std::size_t cap = 200000);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  /// g x g^-1
  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }
  bool is_abelian() const;
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// Nontrivial simple groups of order <= n from the built-in list: cyclic of
/// prime order <= 61, A5, PSL(2,7).
std::vector<FiniteGroup> simple_groups_up_to(std::uint64_t n);

/// G-valued 1-cochain: one value per edge (u,v), u < v, in edge order of the
/// host; phi(v,u) = phi(u,v)^-1.
struct NonAbCochain1 {
  std::vector<std::size_t> values;
  friend bool operator==(const NonAbCochain1&, const NonAbCochain1&) = default;
};

/// A vertex map psi in C^0(X;G).
using VertexMap = std::vector<std::size_t>;

/// 1- and 2-skeleton of a simplicial complex together with a group.
class NonAbContext {
 public:
  NonAbContext(const ComplexZ2& x, FiniteGroup g);

  const FiniteGroup& group() const noexcept { return g_; }
  std::size_t vertices() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<std::array<int, 3>>& triangles() const noexcept { return triangles_; }
  /// Index of edge {u,v}, or npos.
  std::size_t edge_index(int u, int v) const;
  bool connected() const;
  bool complete_graph() const noexcept { return edges_.size() == n_ * (n_ - 1) / 2; }

  NonAbCochain1 identity() const;
  std::size_t value(const NonAbCochain1& phi, int u, int v) const;
  void set(NonAbCochain1& phi, int u, int v, std::size_t g) const;

  /// (d1 phi)(u,v,w) = phi(u,v) phi(v,w) phi(w,u) for each triangle u<v<w.
  std::vector<std::size_t> d1(const NonAbCochain1& phi) const;
  bool is_cocycle(const NonAbCochain1& phi) const;
  /// (psi.phi)(u,v) = psi(u) phi(u,v) psi(v)^-1
  NonAbCochain1 act(const VertexMap& psi, const NonAbCochain1& phi) const;
  /// Edges with phi != 1, as a vector over the edge list.
  BitVec support(const NonAbCochain1& phi) const;
  std::size_t norm(const NonAbCochain1& phi) const { return support(phi).weight(); }
  /// Number of triangles with d1 phi != 1.
  std::size_t d1_norm(const NonAbCochain1& phi) const;

  /// Depth-first spanning tree from vertex 0 (edge indices). Requires connectivity.
  std::vector<std::size_t> spanning_tree() const;
  /// A psi with psi.phi = 1 on every spanning tree edge.
  VertexMap tree_gauge(const NonAbCochain1& phi) const;

 private:
  ComplexZ2 host_;
  FiniteGroup g_;
  std::size_t n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::size_t> edge_at_;  // n*n lookup
};

struct OrbitSet {
  std::vector<NonAbCochain1> representatives;  ///< tree-gauge canonical forms
  std::size_t count = 0;
  std::uint64_t nodes = 0;
};

/// H^1(X;G) as the set of C^0 orbits on Z^1. Cocycles are enumerated in the
/// spanning-tree gauge, where the residual action is conjugation by constants,
/// by a depth-first search that checks each triangle once its edges are set.
/// Requires a connected 1-skeleton; throws BudgetExceeded past `budget` nodes.
OrbitSet h1_orbits(const NonAbContext& ctx, std::uint64_t budget = kDefaultBudget);
/// True iff |H^1(X;G)| >= 2; stops at the first nontrivial gauge cocycle.
bool h1_nontrivial(const NonAbContext& ctx, std::uint64_t node_budget = kDefaultBudget);

/// |Hom(pi_1(X), G) / G| from the presentation with generators e_ij,
/// 2 <= i, j <= n, and the relations (R1)-(R3). Requires a complete 1-skeleton
/// and |G|^C(n-1,2) <= budget.
std::size_t hom_pi1_orbits(const NonAbContext& ctx, std::uint64_t budget = kDefaultBudget);

/// min over all psi in C^0 of ||psi.phi||. Requires |G|^f0 <= budget.
std::size_t nonab_csy(const NonAbContext& ctx, const NonAbCochain1& phi, std::uint64_t budget = kDefaultBudget);

struct QuotientGroupRow {
  std::string group;
  std::size_t nontrivial = 0;
  std::size_t skipped = 0;
  double fraction_nontrivial = 0;
};

struct QuotientReport {
  int n = 0;
  double c = 0;
  double p = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<QuotientGroupRow> groups;
  std::size_t any_nontrivial = 0;  ///< trials with some nontrivial H^1(Y;G)
  std::size_t skipped = 0;         ///< trials with a budget overrun and no nontrivial group found
  double fraction_nontrivial = 0;
};

/// Samples Y(n,p) at p = (6+7c) ln n / n (or `p_override`) and records, per
/// simple group of order <= n^c, whether H^1(Y;G) is nontrivial.
QuotientReport quotient_experiment(int n, double c, std::size_t trials, std::uint64_t seed,
                                   std::uint64_t budget = kDefaultBudget,
                                   std::optional<double> p_override = std::nullopt);

struct HomologyPoint {
  double p = 0;
  std::size_t trials = 0;
  std::size_t vanishing = 0;  ///< trials with H^1(Y;Z2) = 0
  double fraction = 0;
};

/// Fraction of Y(n,p) samples with vanishing H^1(Y;Z2), by GF(2) rank.
std::vector<HomologyPoint> homology_sweep(int n, const std::vector<double>& ps, std::size_t trials,
                                          std::uint64_t seed);

}  // namespace hdx
