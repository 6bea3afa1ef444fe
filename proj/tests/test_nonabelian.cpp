#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hdx/error.hpp"
#include "hdx/expansion.hpp"
#include "hdx/nonabelian.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

// All vertex maps, as base-|G| counters.
bool next_map(VertexMap& psi, std::size_t order) {
  std::size_t i = 0;
  while (i < psi.size() && ++psi[i] == order) psi[i++] = 0;
  return i < psi.size();
}

// Orbits of Z^1 under C^0 by listing every cochain and every vertex map.
std::size_t raw_h1(const NonAbContext& c) {
  const std::size_t order = c.group().order();
  const std::size_t f1 = c.edges().size();
  std::set<std::vector<std::size_t>> seen;
  std::size_t orbits = 0;
  NonAbCochain1 phi = c.identity();
  std::vector<std::size_t> ctr(f1, 0);
  for (;;) {
    phi.values = ctr;
    if (c.is_cocycle(phi) && !seen.count(phi.values)) {
      ++orbits;
      VertexMap psi(c.vertices(), 0);
      do {
        seen.insert(c.act(psi, phi).values);
      } while (next_map(psi, order));
    }
    std::size_t i = 0;
    while (i < f1 && ++ctr[i] == order) ctr[i++] = 0;
    if (i == f1) break;
  }
  return orbits;
}

std::size_t raw_csy(const NonAbContext& c, const NonAbCochain1& phi) {
  std::size_t best = phi.values.size();
  VertexMap psi(c.vertices(), 0);
  do {
    best = std::min(best, c.norm(c.act(psi, phi)));
  } while (next_map(psi, c.group().order()));
  return best;
}

NonAbCochain1 random_cochain(Rng& rng, const NonAbContext& c) {
  NonAbCochain1 phi = c.identity();
  const double density = uniform01(rng);
  for (auto& v : phi.values)
    if (bernoulli(rng, density)) v = uniform_below(rng, c.group().order());
  return phi;
}

}  // namespace

TEST_CASE("group factories") {
  CHECK(FiniteGroup::cyclic(5).order() == 5);
  CHECK(FiniteGroup::cyclic(5).is_abelian());
  CHECK(FiniteGroup::symmetric(3).order() == 6);
  CHECK_FALSE(FiniteGroup::symmetric(3).is_abelian());
  CHECK(FiniteGroup::symmetric(4).order() == 24);
  CHECK(FiniteGroup::symmetric(5).order() == 120);
  CHECK(FiniteGroup::alternating5().order() == 60);
  CHECK(FiniteGroup::psl27().order() == 168);
  for (const FiniteGroup& g : {FiniteGroup::symmetric(3), FiniteGroup::alternating5()}) {
    for (std::size_t a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      CHECK(g.conj(g.identity(), a) == a);
    }
  }
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {0, 1}}), InvalidArgument);
  const auto simple = simple_groups_up_to(60);
  CHECK(simple.back().order() == 60);
  CHECK(simple.front().order() == 2);
  CHECK(simple_groups_up_to(6).size() == 3);
}

TEST_CASE("the action is a group action and preserves cocycles") {
  Rng rng(71);
  const ComplexZ2 x = random_Ynp(5, 0.5, 2);
  const NonAbContext c(x, FiniteGroup::symmetric(3));
  for (int t = 0; t < 200; ++t) {
    VertexMap a(c.vertices()), b(c.vertices()), ab(c.vertices());
    for (std::size_t v = 0; v < c.vertices(); ++v) {
      a[v] = uniform_below(rng, 6);
      b[v] = uniform_below(rng, 6);
      ab[v] = c.group().mul(a[v], b[v]);
    }
    const NonAbCochain1 phi = random_cochain(rng, c);
    CHECK(c.act(ab, phi) == c.act(a, c.act(b, phi)));
    CHECK(c.act(VertexMap(c.vertices(), 0), phi) == phi);
    CHECK(c.is_cocycle(phi) == c.is_cocycle(c.act(a, phi)));
    // A gauge transform of the identity is a cocycle.
    CHECK(c.is_cocycle(c.act(a, c.identity())));
  }
}

TEST_CASE("h1 orbits agree with raw enumeration") {
  const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)};
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t s = 0; s < 4; ++s) {
      const ComplexZ2 x = random_Ynp(n, 0.3 * static_cast<double>(s), s);
      for (const FiniteGroup& g : groups) {
        const NonAbContext c(x, g);
        if (std::pow(static_cast<double>(g.order()), static_cast<double>(c.edges().size())) > 50000) continue;
        CAPTURE(n);
        CAPTURE(g.name());
        CHECK(h1_orbits(c).count == raw_h1(c));
      }
    }
  // A 4-cycle (no 2-cells) with S3: conjugacy classes of S3.
  const ComplexZ2 square = simplicial_closure("c4", {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(h1_orbits(NonAbContext(square, FiniteGroup::symmetric(3))).count == 3);
  CHECK(raw_h1(NonAbContext(square, FiniteGroup::symmetric(3))) == 3);
}

TEST_CASE("h1 orbits equal hom(pi1) orbits") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t s = 0; s < 5; ++s) {
      const ComplexZ2 x = random_Ynp(n, 0.25 * static_cast<double>(s), 10 + s);
      for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
        const NonAbContext c(x, g);
        CHECK(h1_orbits(c).count == hom_pi1_orbits(c));
      }
    }
  const NonAbContext k3(simplex_skeleton(3, 1), FiniteGroup::symmetric(3));
  CHECK(hom_pi1_orbits(k3) == 3);
  CHECK(h1_orbits(NonAbContext(simplex_skeleton(4, 2), FiniteGroup::symmetric(3))).count == 1);
}

TEST_CASE("abelian coefficients match ranks over Z2 and Z3") {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const ComplexZ2 x = random_Ynp(5, 0.1 * static_cast<double>(s % 6), 40 + s);
    const std::size_t b2 = cohomology_dim(RelativePair(x), 1);
    CHECK(h1_orbits(NonAbContext(x, FiniteGroup::cyclic(2))).count == (std::size_t{1} << b2));
    std::size_t three = 1;
    for (std::size_t i = 0; i < oracle::h1_dim_mod3(x); ++i) three *= 3;
    CHECK(h1_orbits(NonAbContext(x, FiniteGroup::cyclic(3))).count == three);
  }
  // The one-triangle example on four vertices.
  std::vector<std::vector<int>> cells = {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}};
  const ComplexZ2 x = simplicial_closure("k4+t", cells);
  CHECK(hom_pi1_orbits(NonAbContext(x, FiniteGroup::cyclic(2))) ==
        (std::size_t{1} << cohomology_dim(RelativePair(x), 1)));
}

TEST_CASE("non-abelian cosystolic norm") {
  Rng rng(72);
  const NonAbContext c(simplex_skeleton(4, 2), FiniteGroup::symmetric(3));
  for (int t = 0; t < 30; ++t) {
    const NonAbCochain1 phi = random_cochain(rng, c);
    CHECK(nonab_csy(c, phi) == raw_csy(c, phi));
  }
  VertexMap psi = {1, 2, 3, 4};
  CHECK(nonab_csy(c, c.act(psi, c.identity())) == 0);
  CHECK_THROWS_AS(nonab_csy(c, c.identity(), 10), BudgetExceeded);
}

TEST_CASE("single edge on the triangle is tight") {
  const NonAbContext c(simplex_skeleton(3, 2), FiniteGroup::cyclic(3));
  NonAbCochain1 phi = c.identity();
  c.set(phi, 1, 2, 1);
  CHECK(nonab_csy(c, phi) == 1);
  CHECK(c.d1_norm(phi) == 1);
  CHECK(3 * c.d1_norm(phi) == c.vertices() * nonab_csy(c, phi));
}

TEST_CASE("coboundary inequality on the 4-simplex") {
  Rng rng(73);
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
    const NonAbContext c(simplex_skeleton(5, 2), g);
    for (int t = 0; t < 150; ++t) {
      const NonAbCochain1 phi = random_cochain(rng, c);
      CHECK(3 * c.d1_norm(phi) >= c.vertices() * nonab_csy(c, phi));
    }
  }
}

TEST_CASE("random complex experiments") {
  const QuotientReport q0 = quotient_experiment(6, 1.0, 8, 1, kDefaultBudget, 0.0);
  CHECK(q0.fraction_nontrivial == 1.0);
  const QuotientReport q1 = quotient_experiment(6, 1.0, 8, 1, kDefaultBudget, 1.0);
  CHECK(q1.fraction_nontrivial == 0.0);
  CHECK(q1.groups.size() == 3);
  const QuotientReport def = quotient_experiment(8, 0.5, 4, 2);
  CHECK(def.p == doctest::Approx(std::min(1.0, 9.5 * std::log(8.0) / 8.0)));

  const auto a = homology_sweep(20, {0.1, 0.5}, 30, 5);
  const auto b = homology_sweep(20, {0.1, 0.5}, 30, 5);
  CHECK(a[0].vanishing == b[0].vanishing);
  CHECK(a[1].vanishing == b[1].vanishing);
  CHECK(a[0].fraction <= a[1].fraction);
  CHECK(homology_sweep(10, {1.0}, 5, 1)[0].fraction == 1.0);
  CHECK(homology_sweep(10, {0.0}, 5, 1)[0].fraction == 0.0);
}
