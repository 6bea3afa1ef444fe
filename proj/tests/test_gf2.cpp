#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdx/error.hpp"
#include "hdx/gf2.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

GF2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density) {
  GF2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.row(i) = oracle::random_bits(rng, cols, density);
  return m;
}

GF2Matrix independent_rows(Rng& rng, std::size_t n, std::size_t want) {
  GF2Matrix b(n, std::vector<BitVec>{});
  for (int tries = 0; b.rows() < want && tries < 500; ++tries) {
    GF2Matrix t = b;
    t.append_row(oracle::random_bits(rng, n, 0.4));
    if (oracle::rank_by_span(n, t.row_list()) == t.rows()) b = std::move(t);
  }
  return b;
}

}  // namespace

TEST_CASE("bitvec basics") {
  const BitVec a = BitVec::from_string("0110");
  CHECK(a.size() == 4);
  CHECK(a.weight() == 2);
  CHECK(a.test(1));
  CHECK_FALSE(a.test(0));
  CHECK(a.to_string() == "0110");
  CHECK(a.first_set() == 1);
  const BitVec b = BitVec::from_string("0011");
  CHECK((a ^ b).to_string() == "0101");
  CHECK(a.dot(b) == true);
  CHECK(a.overlap(b) == 1);
  CHECK(b.lex_less(a));
  CHECK_FALSE(a.lex_less(a));
  CHECK(BitVec(130).none());
  BitVec big(130);
  big.set(129);
  CHECK(big.first_set() == 129);
  CHECK(big.support() == std::vector<std::size_t>{129});
}

TEST_CASE("rank agrees with the size of the span") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + uniform_below(rng, 10), cols = 1 + uniform_below(rng, 12);
    const GF2Matrix m = random_matrix(rng, rows, cols, uniform01(rng));
    CHECK(rank(m) == oracle::rank_by_span(cols, m.row_list()));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("row space membership agrees with enumeration") {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t cols = 1 + uniform_below(rng, 10);
    const GF2Matrix m = random_matrix(rng, 1 + uniform_below(rng, 6), cols, 0.5);
    const auto all = oracle::span(cols, m.row_list());
    const BitVec v = oracle::random_bits(rng, cols, 0.5);
    bool member = false;
    for (const auto& s : all) member = member || s == v;
    CHECK(in_row_space(m, v) == member);
  }
}

TEST_CASE("coset minimum matches enumeration, including the witness") {
  Rng rng(13);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + uniform_below(rng, 24);
    const GF2Matrix b = independent_rows(rng, n, uniform_below(rng, std::min<std::size_t>(n, 12) + 1));
    const CosetProblem p{n, b, oracle::random_bits(rng, n, uniform01(rng))};
    const CosetMinimum m = coset_min_weight(p);
    std::size_t best = n + 1;
    BitVec arg;
    for (const BitVec& s : oracle::span(n, b.row_list())) {
      const BitVec v = p.rep ^ s;
      if (v.weight() < best || (v.weight() == best && v.lex_less(arg))) {
        best = v.weight();
        arg = v;
      }
    }
    CHECK(m.weight == best);
    CHECK(m.witness == arg);
    CHECK(m.visited == (std::uint64_t{1} << b.rows()));
  }
}

TEST_CASE("coset scan is independent of the thread count") {
  Rng rng(14);
  const GF2Matrix b = independent_rows(rng, 40, 14);
  const CosetProblem p{40, b, oracle::random_bits(rng, 40, 0.5)};
  const CosetMinimum one = coset_min_weight(p, kDefaultBudget, 1);
  const CosetMinimum four = coset_min_weight(p, kDefaultBudget, 4);
  CHECK(one.weight == four.weight);
  CHECK(one.witness == four.witness);
}

TEST_CASE("coset scan refuses to exceed the budget") {
  Rng rng(15);
  const GF2Matrix b = independent_rows(rng, 20, 10);
  const CosetProblem p{20, b, BitVec(20)};
  CHECK_THROWS_AS(coset_min_weight(p, 100), BudgetExceeded);
  CHECK_NOTHROW(coset_min_weight(p, 1024));
}

TEST_CASE("invalid coset problems are rejected") {
  GF2Matrix dep(3, std::vector<BitVec>{BitVec::from_string("110"), BitVec::from_string("110")});
  CHECK_THROWS_AS(CosetProblem({3, dep, BitVec(3)}).validate(), InvalidArgument);
  GF2Matrix ok(3, std::vector<BitVec>{BitVec::from_string("110")});
  CHECK_THROWS_AS(CosetProblem({3, ok, BitVec(4)}).validate(), InvalidArgument);
}

TEST_CASE("quotient syndromes round trip") {
  Rng rng(16);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + uniform_below(rng, 14);
    const GF2Matrix m = random_matrix(rng, uniform_below(rng, 8), n, 0.4);
    const QuotientSpace q(n, m);
    CHECK(q.rank() + q.quotient_dim() == n);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << q.quotient_dim()); ++s) {
      const BitVec r = q.representative(s);
      CHECK(q.syndrome(r) == s);
      CHECK(q.reduce(r) == r);
    }
    const BitVec v = oracle::random_bits(rng, n, 0.5);
    CHECK(q.contains(v ^ q.reduce(v)));
  }
}

TEST_CASE("coset leader table matches per-coset scans") {
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + uniform_below(rng, 14);
    const GF2Matrix m = random_matrix(rng, uniform_below(rng, 7), n, 0.4);
    const QuotientSpace q(n, m);
    const CosetLeaderTable table(q);
    const auto sub = oracle::span(n, m.row_list());
    unsigned maxw = 0;
    for (std::uint64_t s = 0; s < table.size(); ++s) {
      const BitVec r = q.representative(s);
      const std::size_t w = oracle::min_weight(r, sub);
      CHECK(table.weight(s) == w);
      const BitVec lead = table.leader(s);
      CHECK(lead.weight() == w);
      CHECK(q.syndrome(lead) == s);
      CHECK(coset_min_weight_auto(q, r).weight == w);
      maxw = std::max<unsigned>(maxw, static_cast<unsigned>(w));
    }
    CHECK(table.max_weight() == maxw);
  }
}

TEST_CASE("symmetric difference inequality") {
  Rng rng(18);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + uniform_below(rng, 100);
    const BitVec a = oracle::random_bits(rng, n, uniform01(rng));
    const BitVec b = oracle::random_bits(rng, n, uniform01(rng));
    const BitVec x = oracle::random_bits(rng, n, uniform01(rng));
    CHECK((a ^ x).weight() + (b ^ x).weight() <= a.weight() + b.weight() + 2 * (a ^ b ^ x).weight());
  }
}
