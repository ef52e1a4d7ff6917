#pragma once

// Generators for the extremal pair used by the flip-distance lower bound:
// a double-apex triangulation over a path, and a bounded-degree host with a
// degree-3 vertex stacked into (almost) every face.

#include <string>
#include <vector>

#include "flipgraph/triangulation.hpp"

namespace flipgraph {

enum class Color : unsigned char { blue, red };

/// Barrel end cap on a hexagonal ring; the value is the number of interior
/// vertices it adds.
enum class CapKind : int {
  alternating_diagonal = 0,
  apex = 1,
  interior_edge = 2,
  interior_triangle = 3,
};

struct HostSpec {
  int vertex_count = 0;
  // m < 12 uses the fixed catalog; otherwise a barrel of `rings` hexagons.
  bool from_catalog = true;
  int rings = 0;
  CapKind top = CapKind::alternating_diagonal;
  CapKind bottom = CapKind::alternating_diagonal;
};

HostSpec host_spec(int m);

/// Triangulation on m >= 4 vertices with maximum degree at most 6.
Triangulation host_max_deg6(int m);

/// Blue vertices are 0..blue_count-1 and induce the host; the rest are red.
struct ColoredTriangulation {
  Triangulation base;
  std::vector<Color> color;
  int blue_count = 0;
};

/// n >= 6. Throws std::invalid_argument otherwise.
ColoredTriangulation build_g1(int n);

struct DoubleApexTriangulation {
  Triangulation base;
  // path[i] = p_i; path vertices are 0..n-3, apexes n-2 and n-1.
  std::vector<Vertex> path;
  Vertex apex_a = 0;
  Vertex apex_b = 0;
};

/// n >= 4. Throws std::invalid_argument otherwise.
DoubleApexTriangulation build_g2(int n);

struct Lemma2Report {
  int n = 0;
  int blue_count = 0;
  int max_degree = 0;
  int max_blue_neighbors = 0;
  int max_red_neighbors = 0;
  bool red_independent = true;
  // 2*floor(n/3) + 28 = 12 + 12 + (2*floor(n/3) + 4)
  long long bound = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Structural facts behind the common-edge bound for G1 against G2.
Lemma2Report check_lemma2_structure(const ColoredTriangulation& g1);

std::vector<std::string> blue_comment_block(const ColoredTriangulation& g1);

}  // namespace flipgraph
