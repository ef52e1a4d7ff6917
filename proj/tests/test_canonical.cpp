#include <doctest.h>

#include <random>

#include "flipgraph/canonical.hpp"
#include "flipgraph/constructions.hpp"
#include "oracles.hpp"

using namespace flipgraph;

TEST_CASE("codes are invariant under relabeling") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + trial % 20;
    const auto t = oracle::random_walk(build_g2(n).base, 3 * n, rng);
    const auto r = t.relabeled(oracle::random_permutation(n, rng));
    CHECK(canonical_code(t, true) == canonical_code(r, true));
    CHECK(canonical_code(t, false) == canonical_code(r, false));
    CHECK(canonical_code(t, true) == canonical_code(t.mirrored(), true));
  }
}

TEST_CASE("code equality matches brute-force isomorphism") {
  for (const bool mirror : {true, false}) {
    const auto classes = oracle::all_triangulations(7, mirror);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        CHECK((canonical_code(classes[i], mirror) == canonical_code(classes[j], mirror)) == (i == j));
      }
    }
  }
}

TEST_CASE("mirror mode distinguishes chiral triangulations") {
  std::mt19937_64 rng(17);
  int chiral = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = oracle::random_walk(build_g2(12).base, 40, rng);
    const bool differ = canonical_code(t, false) != canonical_code(t.mirrored(), false);
    CHECK(differ == !oracle::isomorphic(t, t.mirrored(), false));
    chiral += differ;
  }
  CHECK(chiral > 0);
}

TEST_CASE("decode rebuilds an isomorphic triangulation") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial;
    const auto t = oracle::random_walk(build_g2(n).base, 2 * n, rng);
    for (const bool mirror : {true, false}) {
      const auto c = canonical_code(t, mirror);
      CHECK(c.code.front() == n);
      const auto d = decode(c);
      CHECK(oracle::isomorphic(d, t, true));
      CHECK(canonical_code(d, mirror) == c);
      CHECK(parse_code(format_code(c), mirror) == c);
    }
  }
}

TEST_CASE("malformed codes are rejected") {
  CHECK_THROWS(parse_code("", true));
  CHECK_THROWS(parse_code("4 x", true));
  CanonicalCode bogus{{4, 2, 3, 0, 1, 0}, true};
  CHECK_THROWS(decode(bogus));
}
