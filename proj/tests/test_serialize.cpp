#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdx/error.hpp"
#include "hdx/poset.hpp"
#include "hdx/serialize.hpp"
#include "oracles.hpp"

using namespace hdx;

TEST_CASE("fnv-1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hash_hex(0xabcULL) == "0000000000000abc");
}

TEST_CASE("complexes round trip through json") {
  const std::vector<ComplexZ2> cs = {simplex_skeleton(4, 2), hypercube(3), coxeter_Bn(2),
                                     random_subcomplex(6, 0.3, 4, 1), simplex_skeleton(3, 1).with_reduced(false),
                                     order_complex(boolean_lattice(3).proper_part())};
  for (const ComplexZ2& x : cs) {
    const Json j = complex_to_json(x);
    CHECK(j["schema"] == kComplexSchema);
    CHECK(j["dims"].get<std::vector<std::size_t>>() == x.f_vector());
    const ComplexZ2 y = complex_from_json(j);
    CHECK(y == x);
    CHECK(canonical(complex_to_json(y)) == canonical(j));
    CHECK(complex_hash(y) == complex_hash(x));
  }
  CHECK(complex_hash(hypercube(2)) != complex_hash(hypercube(3)));
}

TEST_CASE("double dual is byte identical") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const ComplexZ2 x = random_subcomplex(5, 0.3, 4, s);
    const ComplexZ2 dd = alexander_dual(alexander_dual(x, 5), 5);
    CHECK(canonical(complex_to_json(dd)).size() == canonical(complex_to_json(x)).size());
    CHECK(complex_hash(dd) == complex_hash(x));
  }
}

TEST_CASE("malformed complex json is rejected") {
  Json good = complex_to_json(simplex_skeleton(3, 1));
  Json j = good;
  j["schema"] = "other";
  CHECK_THROWS_AS(complex_from_json(j), InvalidArgument);
  j = good;
  j["cells"][3][2] = {0, 7};
  CHECK_THROWS_AS(complex_from_json(j), InvalidArgument);
  j = good;
  j["dims"] = {3, 2};
  CHECK_THROWS_AS(complex_from_json(j), InvalidArgument);
  j = good;
  j.erase("cells");
  CHECK_THROWS_AS(complex_from_json(j), InvalidArgument);
  CHECK_THROWS_AS(complex_from_json(Json::array()), InvalidArgument);
}

TEST_CASE("hex bit strings") {
  CHECK(bits_to_hex(BitVec::from_string("1000")) == "8");
  CHECK(bits_to_hex(BitVec::from_string("00000001")) == "01");
  CHECK(bits_to_hex(BitVec::from_string("101")) == "a");
  CHECK(bits_to_hex(BitVec(0)).empty());
  Rng rng(81);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = uniform_below(rng, 200);
    const BitVec v = oracle::random_bits(rng, n, 0.5);
    CHECK(bits_from_hex(bits_to_hex(v), n) == v);
  }
  CHECK_THROWS_AS(bits_from_hex("f", 3), InvalidArgument);
  CHECK_THROWS_AS(bits_from_hex("zz", 8), InvalidArgument);
  CHECK_THROWS_AS(bits_from_hex("ff", 4), InvalidArgument);
}

TEST_CASE("cochain records check the complex") {
  const ComplexZ2 x = hypercube(3);
  const BitVec v = BitVec::from_string("110000000001");
  const Json j = cochain_to_json(x, 1, v);
  int k = -1;
  CHECK(cochain_from_json(x, j, &k) == v);
  CHECK(k == 1);
  CHECK_THROWS_AS(cochain_from_json(hypercube(2), j), InvalidArgument);
  Json bad = j;
  bad["dim"] = 2;
  CHECK_THROWS_AS(cochain_from_json(x, bad), InvalidArgument);
}

TEST_CASE("result records") {
  CHECK(rational_json(Rational(2, 6)) == Json{{"num", 1}, {"den", 3}});
  const Json e = enclosure_json(Enclosure::exact(1, 2));
  CHECK(e["lo"] == "1/2");
  CHECK(e["hi_approx"].get<double>() == 0.5);
}
