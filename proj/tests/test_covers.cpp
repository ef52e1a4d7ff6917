#include <doctest.h>

#include <random>

#include "flipgraph/canonical.hpp"
#include "flipgraph/covers.hpp"
#include "flipgraph/flip_graph.hpp"
#include "oracles.hpp"

using namespace flipgraph;

namespace {

std::vector<Triangulation> catalog_nodes(int n) {
  std::vector<Triangulation> out;
  for (const auto& code : enumerate(n).nodes) out.push_back(decode(code));
  return out;
}

}  // namespace

TEST_CASE("greedy path covers are valid") {
  std::mt19937_64 rng(6);
  for (int n = 4; n <= 200; n += 7) {
    const auto t = oracle::random_walk(build_g2(n).base, 3 * n, rng);
    const auto cover = path_cover(t);
    CHECK(is_valid_path_cover(t, cover));
    CHECK(cover.size() >= 1);
  }
  for (int n = 6; n <= 120; n += 3) {
    const auto g1 = build_g1(n).base;
    CHECK(is_valid_path_cover(g1, path_cover(g1)));
  }
}

TEST_CASE("validity check rejects bad covers") {
  const auto t = build_g2(6).base;
  CHECK_FALSE(is_valid_path_cover(t, PathCover{{{0, 1, 2, 3}, {4}}}));
  CHECK_FALSE(is_valid_path_cover(t, PathCover{{{0, 2}, {1}, {3}, {4}, {5}}}));
  CHECK_FALSE(is_valid_path_cover(t, PathCover{{{0, 1}, {1, 2, 3}, {4}, {5}}}));
  CHECK(is_valid_path_cover(t, PathCover{{{0, 1, 2, 3, 4, 5}}}));
}

TEST_CASE("exact path cover is minimum") {
  for (int n = 4; n <= 8; ++n) {
    for (const auto& t : catalog_nodes(n)) {
      const auto cover = exact_path_cover(t);
      CHECK(is_valid_path_cover(t, cover));
      CHECK(cover.size() == oracle::min_path_cover(t));
      CHECK(path_cover(t).size() >= cover.size());
    }
  }
  // Red vertices are independent and see only blue ones, so a path visits
  // at most blue_count + 1 of them.
  const auto g1 = build_g1(15);
  const int red = 15 - g1.blue_count;
  CHECK(exact_path_cover(g1.base).size() >= red - g1.blue_count);
  CHECK_THROWS_AS(exact_path_cover(build_g2(kExactPathCoverLimit + 1).base), std::invalid_argument);
}

TEST_CASE("path cover mapping meets its guarantee") {
  for (int n = 6; n <= 9; ++n) {
    const auto g2 = build_g2(n);
    for (const auto& h : catalog_nodes(n)) {
      for (const bool exact : {false, true}) {
        const auto cover = exact ? exact_path_cover(h) : path_cover(h);
        const auto m = path_cover_mapping(h, cover, g2);
        CHECK(m.paths == cover.size());
        CHECK(m.guaranteed == n - cover.size() - 2);
        REQUIRE(m.gamma.common.has_value());
        CHECK(*m.gamma.common == common_edges(h, g2.base, m.gamma.forward));
        CHECK(*m.gamma.common >= m.guaranteed);
      }
    }
  }
  for (int n = 20; n <= 200; n += 30) {
    const auto g1 = build_g1(n).base;
    const auto m = path_cover_mapping(g1, path_cover(g1), build_g2(n));
    CHECK(*m.gamma.common >= m.guaranteed);
  }
}

TEST_CASE("maximum matching against the subset oracle") {
  for (int n = 4; n <= 9; ++n) {
    for (const auto& t : catalog_nodes(n)) {
      const auto m = max_matching(t);
      CHECK(is_valid_matching(t, m));
      CHECK(static_cast<int>(m.size()) == oracle::max_matching_size(t));
    }
  }
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = oracle::random_walk(build_g1(18).base, 10, rng);
    CHECK(static_cast<int>(max_matching(t).size()) == oracle::max_matching_size(t));
  }
}

TEST_CASE("matching validity check") {
  const auto t = build_g2(6).base;
  CHECK(is_valid_matching(t, Matching{{0, 1}, {2, 3}}));
  CHECK_FALSE(is_valid_matching(t, Matching{{0, 1}, {1, 2}}));
  CHECK_FALSE(is_valid_matching(t, Matching{{0, 2}}));
}

TEST_CASE("matching mapping keeps the paired edges") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6 + trial;
    const auto a = oracle::random_walk(build_g1(n).base, n, rng);
    const auto b = build_g2(n).base;
    const auto m = matching_mapping(a, b);
    CHECK(m.k == static_cast<int>(std::min(max_matching(a).size(), max_matching(b).size())));
    CHECK(*m.gamma.common == common_edges(a, b, m.gamma.forward));
    CHECK(*m.gamma.common >= m.k);
  }
}
