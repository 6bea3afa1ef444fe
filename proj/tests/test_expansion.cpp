#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdx/error.hpp"
#include "hdx/expansion.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

void check_against_oracle(const RelativePair& x, int k, Mode mode) {
  const bool co = mode == Mode::kCo;
  const auto want = oracle::cheeger(x, k, co);
  if (!want) {
    CHECK_THROWS_AS(cheeger(x, k, mode), DegenerateSpace);
    return;
  }
  const ExpansionResult r = cheeger(x, k, mode);
  CHECK(r.value == *want);
  // The witness re-validates.
  CHECK(r.witness.weight() == r.denominator_norm);
  CHECK(oracle::norm(x, k, r.witness, co) == r.denominator_norm);
  const auto s = oracle::spaces(x, k, co);
  CHECK(oracle::apply_rows(s.image, s.target, r.witness).weight() == r.numerator_norm);
}

}  // namespace

TEST_CASE("cheeger constants agree with exhaustive enumeration") {
  const std::vector<ComplexZ2> cs = {simplex_skeleton(4, 2), simplex_skeleton(4, 3), simplex_skeleton(5, 2),
                                     hypercube(2), hypercube(3), simplicial_closure("disk", {{0, 1, 2}, {1, 2, 3}}),
                                     random_subcomplex(5, 0.3, 3, 1), random_subcomplex(6, 0.15, 3, 2)};
  for (const ComplexZ2& x : cs) {
    const RelativePair p(x);
    for (int k = -1; k <= x.top_dim(); ++k) {
      if (x.f(k) > 16) continue;
      CAPTURE(x.name());
      CAPTURE(k);
      check_against_oracle(p, k, Mode::kCo);
      check_against_oracle(p, k, Mode::kHo);
    }
  }
}

TEST_CASE("hypercube: cohomological constants are 1, homological ones are not") {
  for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 2}, {4, 3}})
    CHECK(cheeger_co(RelativePair(hypercube(d)), k).value == Rational(1));
  const RelativePair q3(hypercube(3));
  // An edge path between antipodal vertices is a 1-chain with boundary of
  // weight 2 and systolic norm 3.
  CHECK(*oracle::cheeger(q3, 1, false) == Rational(2, 3));
  CHECK(cheeger_ho(q3, 1).value == Rational(2, 3));
  CHECK(cheeger_ho(q3, 0).value == Rational(1));
  CHECK(cheeger_ho(RelativePair(hypercube(2)), 1).value == Rational(1));
}

TEST_CASE("cheeger is deterministic across thread counts") {
  const RelativePair x(random_subcomplex(7, 0.25, 4, 8));
  for (int k = 0; k <= x.top_dim(); ++k) {
    try {
      const ExpansionResult a = cheeger_co(x, k, kDefaultBudget, 1);
      const ExpansionResult b = cheeger_co(x, k, kDefaultBudget, 3);
      CHECK(a.value == b.value);
      CHECK(a.witness == b.witness);
      CHECK(a.witness_syndrome == b.witness_syndrome);
    } catch (const DegenerateSpace&) {
    }
  }
}

TEST_CASE("budget and degree errors") {
  const RelativePair x(simplex_skeleton(6, 2));
  CHECK_THROWS_AS(cheeger_co(x, 1, 8), BudgetExceeded);
  CHECK_THROWS_AS(cheeger_co(x, 5), InvalidArgument);
  CHECK_THROWS_AS(cheeger_co(x, -2), InvalidArgument);
  // A single vertex: C^0 = B^0 in the reduced complex.
  CHECK_THROWS_AS(cheeger_co(RelativePair(simplex_skeleton(1, 0)), 0), DegenerateSpace);
}

TEST_CASE("cosystolic and systolic norms agree with enumeration") {
  Rng rng(31);
  const std::vector<ComplexZ2> cs = {simplex_skeleton(5, 2), hypercube(3), random_subcomplex(6, 0.3, 4, 4)};
  for (const ComplexZ2& x : cs) {
    const RelativePair p(x);
    for (int k = 0; k <= x.top_dim(); ++k)
      for (int t = 0; t < 10; ++t) {
        const BitVec v = oracle::random_bits(rng, x.f(k), uniform01(rng));
        const NormResult co = cosystolic_norm(p, k, v);
        CHECK(co.value == oracle::norm(p, k, v, true));
        CHECK(co.form.weight() == co.value);
        const NormResult ho = systolic_norm(p, k, v);
        CHECK(ho.value == oracle::norm(p, k, v, false));
      }
  }
}

TEST_CASE("covering radius agrees with enumeration") {
  CHECK(max_cosystole(RelativePair(simplex_skeleton(4, 3)), 1).lambda == 2);
  const std::vector<ComplexZ2> cs = {simplex_skeleton(5, 2), hypercube(3), random_subcomplex(6, 0.3, 3, 9)};
  for (const ComplexZ2& x : cs) {
    const RelativePair p(x);
    for (int k = 0; k <= x.top_dim(); ++k) {
      if (x.f(k) > 16) continue;
      const MaxCosystole m = max_cosystole(p, k);
      CHECK(m.lambda == oracle::covering_radius(p, k));
      CHECK(oracle::norm(p, k, m.witness, true) == m.lambda);
    }
  }
}

TEST_CASE("covering radius is at most half the cells on random complexes") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const RelativePair p(random_subcomplex(6, 0.4, 4, s));
    for (int k = 0; k <= p.top_dim(); ++k) CHECK(2 * max_cosystole(p, k).lambda <= p.f(k));
  }
}

TEST_CASE("closed-form bounds") {
  const BlamBound b = bound_blam(100, 10);
  CHECK(b.upper == Rational(50));
  CHECK(b.vacuous);
  const BlamBound far = bound_blam(1000000, 1);
  CHECK_FALSE(far.vacuous);
  // (1 - 20/1000) * 500000 = 490000
  CHECK(far.lower.contains(490000));
  CHECK(bound_uphk(1600, 0).hypothesis_holds);
  CHECK_FALSE(bound_uphk(1599, 0).hypothesis_holds);
  CHECK(bound_prod(std::nullopt, 3, 0) == Rational(3, 2));
  CHECK(bound_prod(Rational(1, 3), 3, 0) == Rational(1, 3));
  CHECK(bound_prod(Rational(5), 2, 1) == Rational(1));
}

TEST_CASE("product bound on the three reference cases") {
  const ProductBoundReport a = verify_product_bound(simplex_skeleton(3, 1), 2, 0);
  CHECK(a.holds);
  const ProductBoundReport b = verify_product_bound(simplex_skeleton(1, 0), 3, 0);
  CHECK(b.holds);
  CHECK_FALSE(b.h_x.has_value());
  const ProductBoundReport c = verify_product_bound(hypercube(2), 2, 1);
  CHECK(c.holds);
  // Product of Delta^2 with Delta^1 at k = 0 against enumeration.
  const ComplexZ2 y = product_with_simplex(simplex_skeleton(3, 1), 2);
  CHECK(a.h_product == *oracle::cheeger(RelativePair(y), 0, true));
}
