#include "flipgraph/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace flipgraph {

namespace {

using Faces = std::vector<Face>;

// Triangulated band between two rings of equal length k.
void add_band(Faces& faces, const std::vector<Vertex>& upper, const std::vector<Vertex>& lower) {
  const std::size_t k = upper.size();
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t jn = (j + 1) % k;
    faces.push_back({upper[j], upper[jn], lower[j]});
    faces.push_back({upper[jn], lower[jn], lower[j]});
  }
}

void add_fan(Faces& faces, Vertex apex, const std::vector<Vertex>& ring) {
  for (std::size_t j = 0; j < ring.size(); ++j) {
    faces.push_back({apex, ring[j], ring[(j + 1) % ring.size()]});
  }
}

std::vector<Vertex> ring(Vertex first, int length) {
  std::vector<Vertex> r(length);
  for (int j = 0; j < length; ++j) r[j] = first + j;
  return r;
}

// Closes a hexagonal hole; every ring vertex gains at most two edges.
void add_cap(Faces& faces, const std::vector<Vertex>& r, CapKind kind, Vertex& next_id) {
  switch (kind) {
    case CapKind::alternating_diagonal:
      faces.push_back({r[0], r[1], r[2]});
      faces.push_back({r[2], r[3], r[4]});
      faces.push_back({r[4], r[5], r[0]});
      faces.push_back({r[0], r[2], r[4]});
      break;
    case CapKind::apex:
      add_fan(faces, next_id++, r);
      break;
    case CapKind::interior_edge: {
      const Vertex x = next_id++;
      const Vertex y = next_id++;
      faces.push_back({x, r[0], r[1]});
      faces.push_back({x, r[1], r[2]});
      faces.push_back({x, r[2], r[3]});
      faces.push_back({x, r[3], y});
      faces.push_back({y, r[3], r[4]});
      faces.push_back({y, r[4], r[5]});
      faces.push_back({y, r[5], r[0]});
      faces.push_back({y, r[0], x});
      break;
    }
    case CapKind::interior_triangle: {
      const Vertex x = next_id++;
      const Vertex y = next_id++;
      const Vertex z = next_id++;
      faces.push_back({x, r[0], r[1]});
      faces.push_back({x, r[1], r[2]});
      faces.push_back({x, r[2], y});
      faces.push_back({y, r[2], r[3]});
      faces.push_back({y, r[3], r[4]});
      faces.push_back({y, r[4], z});
      faces.push_back({z, r[4], r[5]});
      faces.push_back({z, r[5], r[0]});
      faces.push_back({z, r[0], x});
      faces.push_back({x, y, z});
      break;
    }
  }
}

Faces bipyramid(int equator) {
  Faces f;
  const auto eq = ring(0, equator);
  add_fan(f, equator, eq);
  add_fan(f, equator + 1, eq);
  return f;
}

Faces square_band() {
  Faces f;
  add_band(f, ring(0, 4), ring(4, 4));
  return f;
}

Faces catalog_faces(int m) {
  switch (m) {
    case 4:
      return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    case 5:
      return bipyramid(3);
    case 6:
      return bipyramid(4);
    case 7:
      return bipyramid(5);
    case 8: {
      // square antiprism, each square split by a diagonal
      Faces f = square_band();
      f.push_back({0, 1, 2});
      f.push_back({0, 2, 3});
      f.push_back({4, 5, 6});
      f.push_back({4, 6, 7});
      return f;
    }
    case 9: {
      // triangular prism 0,1,2 / 3,4,5 with a pyramid on each square
      Faces f{{0, 1, 2}, {3, 4, 5}};
      const std::array<std::array<Vertex, 4>, 3> squares{{{0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}}};
      for (int s = 0; s < 3; ++s) {
        add_fan(f, 6 + s, {squares[s].begin(), squares[s].end()});
      }
      return f;
    }
    case 10:
    case 11: {
      // gyroelongated square bipyramid
      Faces f = square_band();
      add_fan(f, 8, ring(0, 4));
      add_fan(f, 9, ring(4, 4));
      if (m == 11) {
        // stack into (0,1,4); all three corners have degree 5
        auto it = std::find(f.begin(), f.end(), Face{0, 1, 4});
        f.erase(it);
        f.push_back({0, 1, 10});
        f.push_back({1, 4, 10});
        f.push_back({4, 0, 10});
      }
      return f;
    }
    default:
      throw std::invalid_argument("no catalog host for m=" + std::to_string(m));
  }
}

}  // namespace

HostSpec host_spec(int m) {
  if (m < 4) throw std::invalid_argument("host needs m >= 4, got " + std::to_string(m));
  HostSpec spec;
  spec.vertex_count = m;
  if (m < 12) return spec;
  spec.from_catalog = false;
  spec.rings = m / 6;
  const int rest = m % 6;
  spec.top = static_cast<CapKind>(std::min(rest, 3));
  spec.bottom = static_cast<CapKind>(rest - std::min(rest, 3));
  return spec;
}

Triangulation host_max_deg6(int m) {
  const HostSpec spec = host_spec(m);
  if (spec.from_catalog) {
    const Faces f = catalog_faces(m);
    return Triangulation::from_faces(m, f);
  }
  Faces f;
  for (int i = 0; i + 1 < spec.rings; ++i) {
    add_band(f, ring(6 * i, 6), ring(6 * (i + 1), 6));
  }
  Vertex next_id = 6 * spec.rings;
  add_cap(f, ring(0, 6), spec.top, next_id);
  add_cap(f, ring(6 * (spec.rings - 1), 6), spec.bottom, next_id);
  return Triangulation::from_faces(m, f);
}

ColoredTriangulation build_g1(int n) {
  if (n < 6) {
    throw std::invalid_argument("G1 needs n >= 6 (host must have at least 4 vertices), got " +
                                std::to_string(n));
  }
  const int m = n / 3 + 2;
  const Triangulation host = host_max_deg6(m);
  std::vector<Face> faces = host.faces();
  std::vector<std::pair<Face, Face>> keyed;
  keyed.reserve(faces.size());
  for (const Face& f : faces) {
    Face sorted = f;
    std::sort(sorted.begin(), sorted.end());
    keyed.emplace_back(sorted, f);
  }
  std::sort(keyed.begin(), keyed.end());

  // n = 3q+2 fills every face, 3q+1 skips one, 3q skips two.
  const auto skipped = static_cast<std::size_t>(2 - n % 3);
  Faces out;
  out.reserve(faces.size() + 2 * (faces.size() - skipped));
  Vertex next_red = m;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    const Face& f = keyed[i].second;
    if (i < skipped) {
      out.push_back(f);
      continue;
    }
    const Vertex x = next_red++;
    out.push_back({f[0], f[1], x});
    out.push_back({f[1], f[2], x});
    out.push_back({f[2], f[0], x});
  }
  if (next_red != n) {
    throw std::logic_error("G1 construction produced " + std::to_string(next_red) + " vertices");
  }
  ColoredTriangulation g1{Triangulation::from_faces(n, out), std::vector<Color>(n, Color::red), m};
  std::fill(g1.color.begin(), g1.color.begin() + m, Color::blue);
  return g1;
}

DoubleApexTriangulation build_g2(int n) {
  if (n < 4) throw std::invalid_argument("G2 needs n >= 4, got " + std::to_string(n));
  const Vertex a = n - 2;
  const Vertex b = n - 1;
  const int path_len = n - 2;
  Faces f;
  f.reserve(2 * static_cast<std::size_t>(n) - 4);
  for (Vertex i = 0; i + 1 < path_len; ++i) {
    f.push_back({a, i, i + 1});
    f.push_back({b, i + 1, i});
  }
  f.push_back({a, b, 0});
  f.push_back({b, a, path_len - 1});
  DoubleApexTriangulation g2{Triangulation::from_faces(n, f), ring(0, path_len), a, b};
  return g2;
}

Lemma2Report check_lemma2_structure(const ColoredTriangulation& g1) {
  const Triangulation& t = g1.base;
  const int n = t.vertex_count();
  Lemma2Report r;
  r.n = n;
  r.bound = 2LL * (n / 3) + 28;
  constexpr std::size_t max_messages = 20;
  auto violation = [&](std::string msg) {
    if (r.violations.size() < max_messages) r.violations.push_back(std::move(msg));
  };
  if (static_cast<int>(g1.color.size()) != n) {
    violation("color table has " + std::to_string(g1.color.size()) + " entries for " +
              std::to_string(n) + " vertices");
    return r;
  }
  r.blue_count = static_cast<int>(std::count(g1.color.begin(), g1.color.end(), Color::blue));
  if (r.blue_count != n / 3 + 2) {
    violation("blue count " + std::to_string(r.blue_count) + " != floor(n/3)+2 = " +
              std::to_string(n / 3 + 2));
  }
  for (Vertex v = 0; v < n; ++v) {
    int blue = 0;
    int red = 0;
    for (const Vertex w : t.rotation(v)) {
      if (g1.color[w] == Color::blue) {
        ++blue;
      } else {
        ++red;
        if (g1.color[v] == Color::red && v < w) {
          r.red_independent = false;
          violation("red-red edge {" + std::to_string(v) + "," + std::to_string(w) + "}");
        }
      }
    }
    r.max_blue_neighbors = std::max(r.max_blue_neighbors, blue);
    r.max_red_neighbors = std::max(r.max_red_neighbors, red);
    r.max_degree = std::max(r.max_degree, blue + red);
    if (blue + red > 12) {
      violation("vertex " + std::to_string(v) + " has degree " + std::to_string(blue + red));
    }
    if (blue > 6) {
      violation("vertex " + std::to_string(v) + " has " + std::to_string(blue) + " blue neighbors");
    }
    if (red > 6) {
      violation("vertex " + std::to_string(v) + " has " + std::to_string(red) + " red neighbors");
    }
    if (g1.color[v] == Color::red && blue + red != 3) {
      violation("red vertex " + std::to_string(v) + " has degree " + std::to_string(blue + red));
    }
  }
  return r;
}

std::vector<std::string> blue_comment_block(const ColoredTriangulation& g1) {
  return {"# blue 0.." + std::to_string(g1.blue_count - 1)};
}

}  // namespace flipgraph
