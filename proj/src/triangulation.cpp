#include "flipgraph/triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace flipgraph {

namespace {

std::string location(std::size_t line, std::size_t column, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << what;
  return os.str();
}

std::uint64_t edge_key(Vertex a, Vertex b) {
  const auto e = make_edge(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
         static_cast<std::uint32_t>(e.v);
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(location(line, column, what)), line_(line), column_(column) {}

std::string_view to_string(ValidationIssue issue) {
  switch (issue) {
    case ValidationIssue::too_few_vertices: return "too few vertices";
    case ValidationIssue::bad_vertex_id: return "bad vertex id";
    case ValidationIssue::self_loop: return "self-loop";
    case ValidationIssue::duplicate_neighbor: return "duplicate neighbor";
    case ValidationIssue::asymmetric_adjacency: return "asymmetric adjacency";
    case ValidationIssue::wrong_edge_count: return "wrong edge count";
    case ValidationIssue::non_triangular_face: return "non-triangular face";
    case ValidationIssue::wrong_face_count: return "wrong face count";
    case ValidationIssue::disconnected: return "disconnected";
  }
  return "unknown";
}

ValidationError::ValidationError(ValidationIssue issue, const std::string& detail)
    : Error(std::string(to_string(issue)) + ": " + detail), issue_(issue) {}

std::string_view to_string(FlipError error) {
  switch (error) {
    case FlipError::none: return "ok";
    case FlipError::not_an_edge: return "not an edge";
    case FlipError::degenerate_quadrilateral: return "invalid flip: opposite vertices coincide";
    case FlipError::creates_multi_edge:
      return "invalid flip: opposite vertices are already adjacent";
  }
  return "unknown";
}

SequenceError::SequenceError(std::size_t index, Edge edge, FlipError error)
    : Error("flip " + std::to_string(index) + " (" + std::to_string(edge.u) + "," +
            std::to_string(edge.v) + "): " + std::string(to_string(error))),
      index_(index),
      edge_(edge),
      error_(error) {}

Triangulation Triangulation::build(const std::vector<std::vector<Vertex>>& rotations) {
  const auto n = static_cast<Vertex>(rotations.size());
  if (n < 4) {
    throw ValidationError(ValidationIssue::too_few_vertices,
                          "need at least 4 vertices, got " + std::to_string(n));
  }
  Triangulation t;
  t.offsets_.reserve(n + 1);
  t.offsets_.push_back(0);
  std::vector<Vertex> stamp(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (const Vertex w : rotations[v]) {
      if (w < 0 || w >= n) {
        throw ValidationError(ValidationIssue::bad_vertex_id,
                              "vertex " + std::to_string(v) + " lists " + std::to_string(w));
      }
      if (w == v) {
        throw ValidationError(ValidationIssue::self_loop, "at vertex " + std::to_string(v));
      }
      if (stamp[w] == v) {
        throw ValidationError(ValidationIssue::duplicate_neighbor,
                              "vertex " + std::to_string(v) + " lists " + std::to_string(w) +
                                  " twice");
      }
      stamp[w] = v;
      t.adjacency_.push_back(w);
    }
    t.offsets_.push_back(t.adjacency_.size());
  }

  const std::size_t slots = t.adjacency_.size();
  t.next_.resize(slots);
  t.prev_.resize(slots);
  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  keyed.reserve(slots);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t lo = t.offsets_[v];
    const std::size_t hi = t.offsets_[v + 1];
    for (std::size_t s = lo; s < hi; ++s) {
      t.next_[s] = s + 1 == hi ? lo : s + 1;
      t.prev_[s] = s == lo ? hi - 1 : s - 1;
      keyed.emplace_back((static_cast<std::uint64_t>(v) << 32) |
                             static_cast<std::uint32_t>(t.adjacency_[s]),
                         s);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  t.twin_.resize(slots);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t s = t.offsets_[v]; s < t.offsets_[v + 1]; ++s) {
      const Vertex w = t.adjacency_[s];
      const std::uint64_t reverse =
          (static_cast<std::uint64_t>(w) << 32) | static_cast<std::uint32_t>(v);
      auto it = std::lower_bound(keyed.begin(), keyed.end(),
                                 std::pair<std::uint64_t, std::size_t>{reverse, 0});
      if (it == keyed.end() || it->first != reverse) {
        throw ValidationError(ValidationIssue::asymmetric_adjacency,
                              std::to_string(w) + " is a neighbor of " + std::to_string(v) +
                                  " but not vice versa");
      }
      t.twin_[s] = it->second;
    }
  }
  return t;
}

void Triangulation::validate_faces() const {
  const int n = vertex_count();
  const std::size_t expected_edges = 3 * static_cast<std::size_t>(n) - 6;
  if (edge_count() != expected_edges) {
    throw ValidationError(ValidationIssue::wrong_edge_count,
                          "expected " + std::to_string(expected_edges) + ", got " +
                              std::to_string(edge_count()));
  }
  std::vector<char> used(half_edge_count(), 0);
  std::size_t face_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t s = offsets_[v]; s < offsets_[v + 1]; ++s) {
      if (used[s]) continue;
      std::size_t length = 0;
      std::size_t h = s;
      do {
        used[h] = 1;
        h = next_[twin_[h]];
        ++length;
      } while (h != s && length <= 3);
      if (length != 3) {
        throw ValidationError(ValidationIssue::non_triangular_face,
                              "face through directed edge (" + std::to_string(v) + "," +
                                  std::to_string(adjacency_[s]) + ") is not a triangle");
      }
      ++face_count;
    }
  }
  const std::size_t expected_faces = 2 * static_cast<std::size_t>(n) - 4;
  if (face_count != expected_faces) {
    throw ValidationError(ValidationIssue::wrong_face_count,
                          "expected " + std::to_string(expected_faces) + ", got " +
                              std::to_string(face_count));
  }
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Vertex w : rotation(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw ValidationError(ValidationIssue::disconnected,
                          std::to_string(reached) + " of " + std::to_string(n) +
                              " vertices reachable from 0");
  }
}

Triangulation Triangulation::from_rotations(std::vector<std::vector<Vertex>> rotations) {
  Triangulation t = build(rotations);
  t.validate_faces();
  return t;
}

Triangulation Triangulation::from_faces(int vertex_count, std::span<const Face> faces) {
  if (vertex_count < 4) {
    throw ValidationError(ValidationIssue::too_few_vertices,
                          "need at least 4 vertices, got " + std::to_string(vertex_count));
  }
  std::unordered_map<std::uint64_t, std::array<std::size_t, 2>> incident;
  incident.reserve(faces.size() * 2);
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int i = 0; i < 3; ++i) {
      const Vertex a = faces[f][i];
      const Vertex b = faces[f][(i + 1) % 3];
      if (a < 0 || a >= vertex_count) {
        throw ValidationError(ValidationIssue::bad_vertex_id, "face lists " + std::to_string(a));
      }
      if (a == b) {
        throw ValidationError(ValidationIssue::self_loop, "degenerate face");
      }
      auto [it, fresh] = incident.try_emplace(edge_key(a, b), std::array<std::size_t, 2>{f, none});
      if (!fresh) {
        if (it->second[1] != none) {
          throw ValidationError(ValidationIssue::non_triangular_face,
                                "edge {" + std::to_string(a) + "," + std::to_string(b) +
                                    "} lies on more than two faces");
        }
        it->second[1] = f;
      }
    }
  }

  // Orient every face consistently with faces[0] by walking the dual graph.
  std::vector<Face> oriented(faces.begin(), faces.end());
  std::vector<char> done(faces.size(), 0);
  auto has_directed = [](const Face& f, Vertex a, Vertex b) {
    for (int i = 0; i < 3; ++i) {
      if (f[i] == a && f[(i + 1) % 3] == b) return true;
    }
    return false;
  };
  for (std::size_t root = 0; root < faces.size(); ++root) {
    if (done[root]) continue;
    done[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3; ++i) {
        const Vertex a = oriented[f][i];
        const Vertex b = oriented[f][(i + 1) % 3];
        const auto& pair = incident.at(edge_key(a, b));
        if (pair[1] == none) {
          throw ValidationError(ValidationIssue::non_triangular_face,
                                "edge {" + std::to_string(a) + "," + std::to_string(b) +
                                    "} lies on a single face");
        }
        const std::size_t g = pair[0] == f ? pair[1] : pair[0];
        if (!done[g]) {
          if (has_directed(oriented[g], a, b)) std::swap(oriented[g][1], oriented[g][2]);
          done[g] = 1;
          stack.push_back(g);
        } else if (has_directed(oriented[g], a, b)) {
          throw ValidationError(ValidationIssue::non_triangular_face,
                                "face list is not consistently orientable");
        }
      }
    }
  }

  // A traced face (u,v,w) means w follows u clockwise around v.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> successor(vertex_count);
  for (const Face& f : oriented) {
    for (int i = 0; i < 3; ++i) {
      successor[f[(i + 1) % 3]].emplace_back(f[i], f[(i + 2) % 3]);
    }
  }
  std::vector<std::vector<Vertex>> rotations(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& succ = successor[v];
    if (succ.empty()) {
      throw ValidationError(ValidationIssue::disconnected,
                            "vertex " + std::to_string(v) + " lies on no face");
    }
    std::sort(succ.begin(), succ.end());
    for (std::size_t i = 1; i < succ.size(); ++i) {
      if (succ[i].first == succ[i - 1].first) {
        throw ValidationError(ValidationIssue::duplicate_neighbor,
                              "link of vertex " + std::to_string(v) + " is not a cycle");
      }
    }
    auto lookup = [&](Vertex u) {
      auto it = std::lower_bound(succ.begin(), succ.end(), std::pair<Vertex, Vertex>{u, -1});
      if (it == succ.end() || it->first != u) {
        throw ValidationError(ValidationIssue::non_triangular_face,
                              "link of vertex " + std::to_string(v) + " is open");
      }
      return it->second;
    };
    const Vertex start = succ.front().first;
    Vertex cur = start;
    do {
      rotations[v].push_back(cur);
      cur = lookup(cur);
    } while (cur != start && rotations[v].size() <= succ.size());
    if (rotations[v].size() != succ.size()) {
      throw ValidationError(ValidationIssue::non_triangular_face,
                            "link of vertex " + std::to_string(v) + " is not a single cycle");
    }
  }
  return from_rotations(std::move(rotations));
}

std::span<const Vertex> Triangulation::rotation(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::out_of_range("unknown vertex id " + std::to_string(v));
  }
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

int Triangulation::degree(Vertex v) const { return static_cast<int>(rotation(v).size()); }

int Triangulation::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    best = std::max(best, static_cast<int>(offsets_[v + 1] - offsets_[v]));
  }
  return best;
}

std::optional<std::size_t> Triangulation::find_slot(Vertex tail, Vertex head) const {
  if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count()) {
    return std::nullopt;
  }
  // Scan the shorter rotation.
  if (offsets_[tail + 1] - offsets_[tail] <= offsets_[head + 1] - offsets_[head]) {
    for (std::size_t s = offsets_[tail]; s < offsets_[tail + 1]; ++s) {
      if (adjacency_[s] == head) return s;
    }
  } else {
    for (std::size_t s = offsets_[head]; s < offsets_[head + 1]; ++s) {
      if (adjacency_[s] == tail) return twin_[s];
    }
  }
  return std::nullopt;
}

bool Triangulation::has_edge(Vertex a, Vertex b) const { return find_slot(a, b).has_value(); }

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (const Vertex w : rotation(v)) {
      if (v < w) out.push_back({v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> Triangulation::rotations() const {
  std::vector<std::vector<Vertex>> out(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) {
    const auto r = rotation(v);
    out[v].assign(r.begin(), r.end());
  }
  return out;
}

Vertex Triangulation::next_cw(Vertex v, Vertex u) const {
  const auto s = find_slot(v, u);
  if (!s) throw std::out_of_range("not an edge");
  return adjacency_[next_[*s]];
}

Vertex Triangulation::prev_cw(Vertex v, Vertex u) const {
  const auto s = find_slot(v, u);
  if (!s) throw std::out_of_range("not an edge");
  return adjacency_[prev_[*s]];
}

std::vector<Face> Triangulation::faces() const {
  std::vector<Face> out;
  out.reserve(2 * static_cast<std::size_t>(vertex_count()) - 4);
  std::vector<char> used(half_edge_count(), 0);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (std::size_t s = offsets_[v]; s < offsets_[v + 1]; ++s) {
      if (used[s]) continue;
      Face f{};
      std::size_t h = s;
      Vertex tail = v;
      for (int i = 0; i < 3; ++i) {
        used[h] = 1;
        f[i] = tail;
        tail = adjacency_[h];
        h = next_[twin_[h]];
      }
      if (h != s) {
        throw ValidationError(ValidationIssue::non_triangular_face, "corrupt embedding");
      }
      out.push_back(f);
    }
  }
  return out;
}

Triangulation Triangulation::mirrored() const {
  auto r = rotations();
  for (auto& row : r) std::reverse(row.begin(), row.end());
  return build(r);
}

Triangulation Triangulation::relabeled(std::span<const Vertex> perm) const {
  const int n = vertex_count();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabeling has wrong size");
  }
  std::vector<char> hit(n, 0);
  for (const Vertex p : perm) {
    if (p < 0 || p >= n || hit[p]) throw std::invalid_argument("relabeling is not a permutation");
    hit[p] = 1;
  }
  std::vector<std::vector<Vertex>> r(n);
  for (Vertex v = 0; v < n; ++v) {
    for (const Vertex w : rotation(v)) r[perm[v]].push_back(perm[w]);
  }
  return build(r);
}

struct FlipAccess {
  struct Quad {
    std::size_t slot;
    Vertex c;
    Vertex d;
  };

  static std::optional<Quad> locate(const Triangulation& t, Edge e, FlipError& error) {
    const auto slot = t.find_slot(e.u, e.v);
    if (!slot || e.u == e.v) {
      error = FlipError::not_an_edge;
      return std::nullopt;
    }
    // c closes the face on (u,v); d closes the face on (v,u).
    const Vertex c = t.adjacency_[t.next_[t.twin_[*slot]]];
    const Vertex d = t.adjacency_[t.next_[*slot]];
    if (c == d) {
      error = FlipError::degenerate_quadrilateral;
    } else if (t.has_edge(c, d)) {
      error = FlipError::creates_multi_edge;
    } else {
      error = FlipError::none;
    }
    return Quad{*slot, c, d};
  }

  static Triangulation apply(const Triangulation& t, Edge e, Vertex c, Vertex d) {
    auto r = t.rotations();
    auto erase = [](std::vector<Vertex>& row, Vertex x) {
      row.erase(std::find(row.begin(), row.end(), x));
    };
    auto insert_after = [](std::vector<Vertex>& row, Vertex anchor, Vertex x) {
      row.insert(std::find(row.begin(), row.end(), anchor) + 1, x);
    };
    erase(r[e.u], e.v);
    erase(r[e.v], e.u);
    // Around c the face (u,v,c) sits between v and u; around d, (v,u,d) sits
    // between u and v.
    insert_after(r[c], e.v, d);
    insert_after(r[d], e.u, c);
    return Triangulation::build(r);
  }
};

FlipError check_flip(const Triangulation& t, Edge e) {
  FlipError error = FlipError::none;
  FlipAccess::locate(t, e, error);
  return error;
}

bool operator==(const Triangulation& a, const Triangulation& b) {
  if (a.offsets_ != b.offsets_) return false;
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    const auto ra = a.rotation(v);
    const auto rb = b.rotation(v);
    const auto it = std::find(ra.begin(), ra.end(), rb[0]);
    if (it == ra.end()) return false;
    const std::size_t shift = static_cast<std::size_t>(it - ra.begin());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      if (ra[(shift + i) % ra.size()] != rb[i]) return false;
    }
  }
  return true;
}

FlipResult flip(const Triangulation& t, Edge e) {
  FlipResult result;
  result.removed = make_edge(e.u, e.v);
  const auto quad = FlipAccess::locate(t, e, result.error);
  if (result.error != FlipError::none) return result;
  result.inserted = make_edge(quad->c, quad->d);
  result.triangulation = FlipAccess::apply(t, e, quad->c, quad->d);
  return result;
}

Triangulation apply_sequence(const Triangulation& t, std::span<const Edge> sequence) {
  Triangulation current = t;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    auto r = flip(current, sequence[i]);
    if (!r) throw SequenceError(i, sequence[i], r.error);
    current = std::move(*r.triangulation);
  }
  return current;
}

namespace {

class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  bool at_end() const { return pos_ == line_.size(); }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_no_, column(), what);
  }

  void expect(std::string_view literal) {
    if (line_.substr(pos_, literal.size()) != literal) {
      fail("expected '" + std::string(literal) + "'");
    }
    pos_ += literal.size();
  }

  long long integer() {
    long long value = 0;
    const char* begin = line_.data() + pos_;
    const char* end = line_.data() + line_.size();
    if (begin == end || *begin < '0' || *begin > '9') fail("expected a non-negative integer");
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("integer out of range");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto skip_comments = [&] {
    while (i < lines.size() && !lines[i].empty() && lines[i].front() == '#') ++i;
  };
  skip_comments();
  if (i == lines.size()) throw ParseError(lines.size() + 1, 1, "missing header 'n <N>'");
  long long n = 0;
  {
    LineCursor cur(lines[i], i + 1);
    cur.expect("n ");
    n = cur.integer();
    if (!cur.at_end()) cur.fail("trailing characters after header");
    if (n > (1 << 26)) cur.fail("vertex count too large");
  }
  ++i;
  std::vector<std::vector<Vertex>> rotations(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (long long row = 0; row < n; ++row) {
    skip_comments();
    if (i == lines.size()) {
      throw ParseError(i + 1, 1,
                       "expected " + std::to_string(n) + " vertex lines, got " + std::to_string(row));
    }
    LineCursor cur(lines[i], i + 1);
    const long long v = cur.integer();
    if (v >= n) cur.fail("vertex id " + std::to_string(v) + " out of range");
    if (seen[v]) cur.fail("vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    cur.expect(" :");
    while (!cur.at_end()) {
      cur.expect(" ");
      const long long w = cur.integer();
      if (w >= n) cur.fail("neighbor id " + std::to_string(w) + " out of range");
      rotations[v].push_back(static_cast<Vertex>(w));
    }
    ++i;
  }
  skip_comments();
  if (i < lines.size()) throw ParseError(i + 1, 1, "unexpected content after vertex lines");
  return Triangulation::from_rotations(std::move(rotations));
}

std::string format_triangulation(const Triangulation& t, std::span<const std::string> comment_lines) {
  std::string out;
  for (const auto& c : comment_lines) {
    if (c.empty() || c.front() != '#') out += "# ";
    out += c;
    out += '\n';
  }
  out += "n " + std::to_string(t.vertex_count()) + "\n";
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    out += std::to_string(v);
    out += " :";
    for (const Vertex w : t.rotation(v)) {
      out += ' ';
      out += std::to_string(w);
    }
    out += '\n';
  }
  return out;
}

std::optional<int> parse_blue_block(std::string_view text) {
  constexpr std::string_view prefix = "# blue 0..";
  for (const auto line : split_lines(text)) {
    if (line.substr(0, prefix.size()) != prefix) continue;
    int last = 0;
    const auto rest = line.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), last);
    if (ec == std::errc{} && ptr == rest.data() + rest.size()) return last + 1;
  }
  return std::nullopt;
}

}  // namespace flipgraph
