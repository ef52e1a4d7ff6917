#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flipgraph/triangulation.hpp"

namespace flipgraph {

/// Isomorphism-invariant key of an embedded triangulation.
///
/// Layout: the vertex count, then for each vertex in canonical label order the
/// labels (1-based) of its neighbours in rotation order, each list closed by a
/// 0 separator. With mirror_mode on, reflections are identified.
struct CanonicalCode {
  std::vector<int> code;
  bool mirror_mode = true;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

CanonicalCode canonical_code(const Triangulation& t, bool mirror_mode = true);

/// Rebuilds a triangulation from its code (the mirror image when the minimum
/// was attained on the reflected rotation system).
Triangulation decode(const CanonicalCode& c);

std::string format_code(const CanonicalCode& c);
/// Inverse of format_code; mirror_mode is supplied by the caller.
CanonicalCode parse_code(std::string_view text, bool mirror_mode);

}  // namespace flipgraph
