#pragma once

// Combinatorial triangulations stored as rotation systems.
//
// A Triangulation is an immutable value: every vertex carries the clockwise
// cyclic order of its neighbours. Internally the rotations are packed into a
// CSR layout of half-edges (slot i is the directed edge vertex -> adj[i]) with
// a twin table, so face walks and flips never scan a rotation.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flipgraph {

using Vertex = int;

/// Undirected edge, normalised so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct DirectedEdge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Oriented triangle as produced by face tracing.
using Face = std::array<Vertex, 3>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class ValidationIssue {
  too_few_vertices,
  bad_vertex_id,
  self_loop,
  duplicate_neighbor,
  asymmetric_adjacency,
  wrong_edge_count,
  non_triangular_face,
  wrong_face_count,
  disconnected,
};

std::string_view to_string(ValidationIssue issue);

class ValidationError : public Error {
 public:
  ValidationError(ValidationIssue issue, const std::string& detail);
  ValidationIssue issue() const { return issue_; }

 private:
  ValidationIssue issue_;
};

enum class FlipError {
  none,
  not_an_edge,
  // the two opposite vertices coincide
  degenerate_quadrilateral,
  // the opposite vertices are already adjacent
  creates_multi_edge,
};

std::string_view to_string(FlipError error);

class Triangulation {
 public:
  /// Builds and fully validates. Throws ValidationError.
  static Triangulation from_rotations(std::vector<std::vector<Vertex>> rotations);

  /// Builds from an unordered list of triangles covering a sphere. The faces
  /// are oriented consistently starting from faces[0] as given. Throws
  /// ValidationError when the list does not describe a simple triangulation.
  static Triangulation from_faces(int vertex_count, std::span<const Face> faces);

  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  /// Clockwise rotation of v. Throws std::out_of_range for unknown ids.
  std::span<const Vertex> rotation(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;
  bool has_edge(Vertex a, Vertex b) const;
  std::vector<Edge> edges() const;
  std::vector<std::vector<Vertex>> rotations() const;

  /// Neighbour immediately after u in the clockwise rotation of v.
  Vertex next_cw(Vertex v, Vertex u) const;
  /// Neighbour immediately before u in the clockwise rotation of v.
  Vertex prev_cw(Vertex v, Vertex u) const;

  /// Every face exactly once; each directed edge lies on exactly one face.
  std::vector<Face> faces() const;

  /// All rotations reversed.
  Triangulation mirrored() const;
  /// Vertex v becomes perm[v].
  Triangulation relabeled(std::span<const Vertex> perm) const;

  // Half-edge view used by the hot loops (canonical codes, enumeration).
  std::size_t half_edge_count() const { return adjacency_.size(); }
  std::size_t first_slot(Vertex v) const { return offsets_[v]; }
  Vertex slot_head(std::size_t slot) const { return adjacency_[slot]; }
  std::size_t slot_twin(std::size_t slot) const { return twin_[slot]; }
  std::size_t slot_next(std::size_t slot) const { return next_[slot]; }
  std::size_t slot_prev(std::size_t slot) const { return prev_[slot]; }
  std::optional<std::size_t> find_slot(Vertex tail, Vertex head) const;

  /// Same rotation system: rotations agree up to their cyclic starting point.
  friend bool operator==(const Triangulation& a, const Triangulation& b);

 private:
  Triangulation() = default;
  // Packs rotations; checks ids, loops, duplicates and symmetry.
  static Triangulation build(const std::vector<std::vector<Vertex>>& rotations);
  void validate_faces() const;

  friend struct FlipAccess;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::size_t> twin_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> prev_;
};

struct FlipResult {
  FlipError error = FlipError::none;
  // Set only on success; the input triangulation is never modified.
  std::optional<Triangulation> triangulation;
  Edge removed{};
  Edge inserted{};

  explicit operator bool() const { return error == FlipError::none; }
};

/// Replaces {a,b} by the edge joining the two vertices opposite to it.
FlipResult flip(const Triangulation& t, Edge e);

/// Cheap check with the same outcome as flip() but without building a copy.
FlipError check_flip(const Triangulation& t, Edge e);

using FlipSequence = std::vector<Edge>;

class SequenceError : public Error {
 public:
  SequenceError(std::size_t index, Edge edge, FlipError error);
  std::size_t index() const { return index_; }
  Edge edge() const { return edge_; }
  FlipError flip_error() const { return error_; }

 private:
  std::size_t index_;
  Edge edge_;
  FlipError error_;
};

/// Applies the flips in order. Throws SequenceError at the first bad flip.
Triangulation apply_sequence(const Triangulation& t, std::span<const Edge> sequence);

// ASCII rotation format.
Triangulation parse_triangulation(std::string_view text);
std::string format_triangulation(const Triangulation& t,
                                 std::span<const std::string> comment_lines = {});

/// Reads a `# blue 0..<m-1>` comment block, if present, and returns m.
std::optional<int> parse_blue_block(std::string_view text);

}  // namespace flipgraph
