#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdx/error.hpp"
#include "hdx/expansion.hpp"
#include "hdx/pseudomanifold.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

ComplexZ2 polygon(int m) {
  std::vector<std::vector<int>> e;
  for (int i = 0; i < m; ++i) e.push_back({std::min(i, (i + 1) % m), std::max(i, (i + 1) % m)});
  return simplicial_closure("polygon", e);
}

ComplexZ2 octahedron() {
  std::vector<std::vector<int>> f;
  for (int m = 0; m < 8; ++m) f.push_back({(m & 1), 2 + ((m >> 1) & 1), 4 + ((m >> 2) & 1)});
  return simplicial_closure("octahedron", f);
}

ComplexZ2 disk() { return simplicial_closure("disk", {{0, 1, 2}, {1, 2, 3}}); }

}  // namespace

TEST_CASE("flip graph of polygons") {
  for (int m = 3; m <= 9; ++m) {
    const FlipGraph g = flip_graph(polygon(m));
    CHECK(g.vertices == static_cast<std::size_t>(m));
    CHECK(g.edges.size() == static_cast<std::size_t>(m));
    CHECK(g.pseudomanifold());
    CHECK(diameter(g) == m / 2);
    CHECK(cheeger_top_via_diameter(polygon(m)) == Rational(2, m / 2));
  }
}

TEST_CASE("diameter route equals the exact constant") {
  const std::vector<ComplexZ2> gallery = {polygon(5), polygon(6), simplex_skeleton(4, 2), simplex_skeleton(5, 3),
                                          octahedron(), coxeter_Bn(2), coxeter_An(4)};
  for (const ComplexZ2& x : gallery) {
    const Rational viad = cheeger_top_via_diameter(x);
    CHECK(cheeger_co(RelativePair(x), x.top_dim() - 1).value == viad);
  }
  CHECK(cheeger_top_via_diameter(coxeter_An(4)) == Rational(1, 3));
  CHECK(cheeger_top_via_diameter(coxeter_An(5)) == Rational(1, 5));
  CHECK(cheeger_top_via_diameter(coxeter_Bn(3)) == Rational(2, 9));
}

TEST_CASE("hypotheses are enforced") {
  // Two triangles glued along an edge: the outer edges lie in one facet.
  CHECK_THROWS_AS(cheeger_top_via_diameter(disk()), HypothesisFailed);
  CHECK_FALSE(flip_graph(disk()).ridges_in_two);
  // The exact constant still exists for the disk.
  CHECK(cheeger_co(RelativePair(disk()), 1).value == *oracle::cheeger(RelativePair(disk()), 1, true));
  const ComplexZ2 rp2 = simplicial_closure("rp2", {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                   {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
  CHECK(flip_graph(rp2).pseudomanifold());
  CHECK_THROWS_AS(cheeger_top_via_diameter(rp2), HypothesisFailed);
  CHECK_THROWS_AS(flip_graph(simplicial_closure("mixed", {{0, 1, 2}, {2, 3}})), HypothesisFailed);
}

TEST_CASE("flip subgraph odd degrees are the coboundary") {
  Rng rng(51);
  for (const ComplexZ2& x : {simplex_skeleton(5, 3), coxeter_An(4), octahedron()}) {
    const FlipGraph g = flip_graph(x);
    for (int t = 0; t < 30; ++t) {
      const BitVec phi = oracle::random_bits(rng, x.f(x.top_dim() - 1), uniform01(rng));
      const auto edges = cochain_flip_subgraph(g, phi);
      CHECK(edges.size() == phi.weight());
      CHECK(odd_degree_support(g, edges) == x.coboundary(x.top_dim() - 1, phi));
    }
  }
}

TEST_CASE("T-join cosystole matches the coset scan") {
  Rng rng(52);
  for (const ComplexZ2& x : {simplex_skeleton(5, 3), coxeter_An(4), octahedron(), polygon(7)}) {
    const int k = x.top_dim() - 1;
    for (int t = 0; t < 25; ++t) {
      const BitVec phi = oracle::random_bits(rng, x.f(k), 0.15 * uniform01(rng));
      if (x.coboundary(k, phi).weight() > 16) continue;
      CHECK(codim1_cosystole(x, phi) == cosystolic_norm(RelativePair(x), k, phi).value);
    }
  }
  CHECK_THROWS_AS(codim1_cosystole(disk(), BitVec(disk().f(1))), HypothesisFailed);
}

TEST_CASE("explicit cochains on the type A complexes") {
  for (int n = 4; n <= 6; ++n) {
    const ComplexZ2 x = coxeter_An(n);
    const BitVec phi = phi_n_cochain(n, x);
    CHECK(phi.weight() == binomial(n, 2));
    const BitVec d = x.coboundary(n - 3, phi);
    CHECK(d.weight() == 2);
    // The odd facets are the ends of the path of permutations, C(n,2) apart.
    const auto m = static_cast<int>(binomial(n, 2));
    const std::size_t a = coxeter_An_top_cell(x, n, phi_n_permutation(n, 0));
    const std::size_t b = coxeter_An_top_cell(x, n, phi_n_permutation(n, m));
    CHECK(d.test(a));
    CHECK(d.test(b));
    CHECK(bfs_distances(flip_graph(x), a)[b] == static_cast<int>(binomial(n, 2)));
    CHECK(codim1_cosystole(x, phi) == phi.weight());
  }
  CHECK(cosystolic_norm(RelativePair(coxeter_An(4)), 1, phi_n_cochain(4)).value == 6);
}

TEST_CASE("flip graphs are forests only when acyclic") {
  const FlipGraph g = flip_graph(polygon(5));
  CHECK(is_forest(g, {0, 1, 2}));
  CHECK_FALSE(is_forest(g, {0, 1, 2, 3, 4}));
  CHECK(flip_graph_edge_list(g).find('\n') != std::string::npos);
}
