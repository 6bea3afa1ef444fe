#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

namespace hdx {

/// Graph on the top cells of a pure complex; two top cells are adjacent when
/// they share a codimension-one face.
struct FlipGraph {
  int dim = 0;
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< u < v, sorted
  std::vector<std::size_t> edge_ridge;  ///< ridge shared by each edge (smallest if several)
  std::vector<std::vector<std::size_t>> adj;
  bool ridges_in_two = false;  ///< every ridge lies in exactly two top cells
  bool connected = false;
  bool pseudomanifold() const noexcept { return ridges_in_two && connected; }
};

/// Throws HypothesisFailed when the complex is not pure.
FlipGraph flip_graph(const ComplexZ2& x);

/// BFS eccentricities from every vertex; returns -1 for a disconnected graph.
int diameter(const FlipGraph& g);
std::vector<int> bfs_distances(const FlipGraph& g, std::size_t source);

/// 2 / diam(G_X). Throws HypothesisFailed unless X is a pseudomanifold with
/// vanishing codimension-one cohomology.
Rational cheeger_top_via_diameter(const ComplexZ2& x);

/// Edges of G_X whose shared ridge lies in supp(phi). Requires ridges_in_two.
std::vector<std::size_t> cochain_flip_subgraph(const FlipGraph& g, const BitVec& phi);
/// Top cells of odd degree in the subgraph given by `edges`.
BitVec odd_degree_support(const FlipGraph& g, const std::vector<std::size_t>& edges);
bool is_forest(const FlipGraph& g, const std::vector<std::size_t>& edges);

/// Cosystolic norm of a codimension-one cochain on a pseudomanifold with
/// vanishing codimension-one cohomology: cochains with the same coboundary
/// differ by a coboundary, so the norm is a minimum T-join in G_X with T the
/// support of d phi. Throws HypothesisFailed off these hypotheses and
/// InvalidArgument when |T| > 20.
std::size_t codim1_cosystole(const ComplexZ2& x, const BitVec& phi);

/// "u v" per line, vertices numbered by top-cell index.
std::string flip_graph_edge_list(const FlipGraph& g);

/// Vertex order of coxeter_An(n): the proper nonempty subsets of [n] by
/// (size, bitmask). Entry i is the bitmask of vertex i.
std::vector<std::uint32_t> coxeter_An_vertex_masks(int n);

/// The permutation pi_m of the explicit (n-3)-cochain construction, m in
/// [0, C(n,2)], as a 1-based sequence.
std::vector<int> phi_n_permutation(int n, int m);
/// The explicit (n-3)-cochain phi_n on coxeter_An(n), 4 <= n <= 6.
BitVec phi_n_cochain(int n, const ComplexZ2& coxeter);
BitVec phi_n_cochain(int n);
/// Index of the top cell F(pi) of coxeter_An(n).
std::size_t coxeter_An_top_cell(const ComplexZ2& coxeter, int n, const std::vector<int>& pi);

}  // namespace hdx
