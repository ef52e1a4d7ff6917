#include <doctest.h>

#include <random>
#include <set>

#include "flipgraph/constructions.hpp"
#include "flipgraph/triangulation.hpp"
#include "oracles.hpp"

using namespace flipgraph;

namespace {

const char* kOctahedron =
    "# octahedron\n"
    "n 6\n"
    "0 : 1 2 3 4\n"
    "1 : 0 4 5 2\n"
    "2 : 0 1 5 3\n"
    "3 : 0 2 5 4\n"
    "4 : 0 3 5 1\n"
    "5 : 1 4 3 2\n";

ValidationIssue issue_of(const std::vector<std::vector<Vertex>>& rot) {
  try {
    Triangulation::from_rotations(rot);
  } catch (const ValidationError& e) {
    return e.issue();
  }
  FAIL("expected a validation error");
  return ValidationIssue::too_few_vertices;
}

}  // namespace

TEST_CASE("parse and format round trip") {
  const auto t = parse_triangulation(kOctahedron);
  CHECK(t.vertex_count() == 6);
  CHECK(t.edge_count() == 12);
  CHECK(t.faces().size() == 8);
  CHECK(t.max_degree() == 4);
  const auto again = parse_triangulation(format_triangulation(t));
  CHECK(again == t);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_triangulation(""), ParseError);
  CHECK_THROWS_AS(parse_triangulation("n 4\n0 : 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_triangulation("n 4\n0 : 1 2 3\n1 : 0 3 2\n2 : 0 1 3\n3 :  0 2 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_triangulation("n 4\n0 : 1 2 x\n"), ParseError);
  try {
    parse_triangulation("n 4\n0 : 1 2 3\n1 : 0 3 2\n1 : 0 1 3\n3 : 0 2 1\n");
    FAIL("duplicate vertex line accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("validation rejects broken rotation systems") {
  CHECK(issue_of({{1, 2}, {0, 2}, {0, 1}}) == ValidationIssue::too_few_vertices);
  CHECK(issue_of({{1, 2, 7}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}) == ValidationIssue::bad_vertex_id);
  CHECK(issue_of({{0, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}) == ValidationIssue::self_loop);
  CHECK(issue_of({{1, 1, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}) == ValidationIssue::duplicate_neighbor);
  CHECK(issue_of({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2}}) == ValidationIssue::asymmetric_adjacency);
  // octahedron with one rotation scrambled
  CHECK(issue_of({{1, 3, 2, 4}, {0, 4, 5, 2}, {0, 1, 5, 3}, {0, 2, 5, 4}, {0, 3, 5, 1},
                  {1, 4, 3, 2}}) == ValidationIssue::non_triangular_face);
  // octahedron minus an edge is not maximal
  CHECK(issue_of({{1, 2, 3, 4}, {0, 4, 5, 2}, {0, 1, 5, 3}, {0, 2, 5, 4}, {0, 3, 5, 1}, {1, 4, 3, 2},
                  {}}) == ValidationIssue::wrong_edge_count);
}

TEST_CASE("k4 flips are all invalid") {
  const auto t = oracle::k4();
  for (const Edge e : t.edges()) {
    const auto r = flip(t, e);
    CHECK_FALSE(r);
    CHECK(r.error == FlipError::creates_multi_edge);
    CHECK(check_flip(t, e) == r.error);
  }
  CHECK(flip(build_g2(5).base, Edge{0, 2}).error == FlipError::not_an_edge);
}

TEST_CASE("flip replaces the diagonal of the quadrilateral") {
  const auto t = parse_triangulation(kOctahedron);
  const auto r = flip(t, Edge{0, 1});
  REQUIRE(r);
  CHECK(r.removed == Edge{0, 1});
  CHECK(r.inserted == Edge{2, 4});
  CHECK_FALSE(r.triangulation->has_edge(0, 1));
  CHECK(r.triangulation->has_edge(2, 4));
  const auto back = flip(*r.triangulation, r.inserted);
  REQUIRE(back);
  CHECK(back.inserted == Edge{0, 1});
  CHECK(*back.triangulation == t);
}

TEST_CASE("random flips keep the triangulation invariants") {
  std::mt19937_64 rng(11);
  auto t = build_g2(30).base;
  for (int i = 0; i < 500; ++i) {
    const auto edges = t.edges();
    const Edge e = edges[rng() % edges.size()];
    auto r = flip(t, e);
    if (!r) continue;
    const auto& next = *r.triangulation;
    CHECK(next.edge_count() == 3u * 30 - 6);
    CHECK(next.faces().size() == 2u * 30 - 4);
    CHECK(Triangulation::from_rotations(next.rotations()) == next);
    const auto back = flip(next, r.inserted);
    REQUIRE(back);
    CHECK(*back.triangulation == t);
    t = next;
  }
}

TEST_CASE("apply_sequence reports the failing index") {
  const auto t = parse_triangulation(kOctahedron);
  const std::vector<Edge> seq{{0, 1}, {2, 4}, {1, 0}, {0, 1}};
  const auto r = apply_sequence(t, std::span<const Edge>(seq).first(2));
  CHECK(r == t);
  try {
    apply_sequence(t, seq);
    FAIL("sequence should fail");
  } catch (const SequenceError& e) {
    CHECK(e.index() == 3);
    CHECK(e.flip_error() == FlipError::not_an_edge);
  }
}

TEST_CASE("mirror and relabel") {
  const auto t = parse_triangulation(kOctahedron);
  const auto m = t.mirrored();
  CHECK(m.mirrored() == t);
  CHECK(oracle::isomorphic(t, m, true));
  std::mt19937_64 rng(5);
  const auto perm = oracle::random_permutation(6, rng);
  const auto r = t.relabeled(perm);
  CHECK(oracle::isomorphic(t, r, false));
  CHECK_THROWS_AS(t.relabeled(std::vector<Vertex>{0, 0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("faces cover each directed edge once") {
  const auto t = build_g1(20).base;
  std::set<std::pair<Vertex, Vertex>> directed;
  for (const Face& f : t.faces()) {
    for (int i = 0; i < 3; ++i) CHECK(directed.insert({f[i], f[(i + 1) % 3]}).second);
  }
  CHECK(directed.size() == 2 * t.edge_count());
}

TEST_CASE("from_faces orients and validates") {
  std::vector<Face> faces{{0, 1, 2}, {0, 3, 2}, {0, 1, 3}, {1, 2, 3}};
  const auto t = Triangulation::from_faces(4, faces);
  CHECK(t.edge_count() == 6);
  faces.pop_back();
  CHECK_THROWS_AS(Triangulation::from_faces(4, faces), ValidationError);
}

TEST_CASE("blue block") {
  CHECK(parse_blue_block("# blue 0..4\nn 4\n") == 5);
  CHECK_FALSE(parse_blue_block(kOctahedron).has_value());
}
