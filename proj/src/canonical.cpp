#include "flipgraph/canonical.hpp"

#include <boost/container_hash/hash.hpp>

#include <charconv>

namespace flipgraph {

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::size_t seed = boost::hash_range(c.code.begin(), c.code.end());
  boost::hash_combine(seed, c.mirror_mode);
  return seed;
}

namespace {

// Breadth-first labelling rooted at one half-edge. Writes the candidate into
// `out` while comparing it against `best`; returns false as soon as the
// candidate is known to be larger (the buffer is then incomplete).
class CodeBuilder {
 public:
  explicit CodeBuilder(const Triangulation& t)
      : t_(t),
        n_(t.vertex_count()),
        label_(n_, 0),
        start_(n_, 0),
        order_(n_, 0) {}

  bool run(std::size_t root, bool reflected, const std::vector<int>* best, std::vector<int>& out) {
    std::fill(label_.begin(), label_.end(), 0);
    out.clear();
    out.push_back(n_);
    int cmp = best ? 0 : -1;
    auto emit = [&](int value) {
      if (cmp == 0) {
        const int other = (*best)[out.size()];
        if (value > other) return false;
        if (value < other) cmp = -1;
      }
      out.push_back(value);
      return true;
    };

    const std::size_t back = t_.slot_twin(root);
    const Vertex u = t_.slot_head(back);
    const Vertex v = t_.slot_head(root);
    label_[u] = 1;
    label_[v] = 2;
    order_[0] = u;
    order_[1] = v;
    start_[u] = root;
    start_[v] = back;
    int assigned = 2;
    for (int k = 0; k < n_; ++k) {
      const Vertex x = order_[k];
      const std::size_t first = start_[x];
      std::size_t s = first;
      do {
        const Vertex w = t_.slot_head(s);
        if (label_[w] == 0) {
          label_[w] = ++assigned;
          order_[assigned - 1] = w;
          start_[w] = t_.slot_twin(s);
        }
        if (!emit(label_[w])) return false;
        s = reflected ? t_.slot_prev(s) : t_.slot_next(s);
      } while (s != first);
      if (!emit(0)) return false;
    }
    return true;
  }

 private:
  const Triangulation& t_;
  int n_;
  std::vector<int> label_;
  std::vector<std::size_t> start_;
  std::vector<Vertex> order_;
};

}  // namespace

CanonicalCode canonical_code(const Triangulation& t, bool mirror_mode) {
  CodeBuilder builder(t);
  std::vector<int> best;
  std::vector<int> candidate;
  bool have_best = false;
  for (int pass = 0; pass < (mirror_mode ? 2 : 1); ++pass) {
    const bool reflected = pass == 1;
    for (std::size_t root = 0; root < t.half_edge_count(); ++root) {
      if (builder.run(root, reflected, have_best ? &best : nullptr, candidate)) {
        if (!have_best || candidate < best) best.swap(candidate);
        have_best = true;
      }
    }
  }
  return CanonicalCode{std::move(best), mirror_mode};
}

Triangulation decode(const CanonicalCode& c) {
  if (c.code.empty() || c.code.front() < 4) {
    throw ValidationError(ValidationIssue::too_few_vertices, "malformed canonical code");
  }
  const int n = c.code.front();
  std::vector<std::vector<Vertex>> rotations(n);
  int vertex = 0;
  for (std::size_t i = 1; i < c.code.size(); ++i) {
    const int value = c.code[i];
    if (value == 0) {
      ++vertex;
      continue;
    }
    if (vertex >= n) {
      throw ValidationError(ValidationIssue::bad_vertex_id, "canonical code too long");
    }
    rotations[vertex].push_back(value - 1);
  }
  if (vertex != n) {
    throw ValidationError(ValidationIssue::bad_vertex_id, "canonical code has wrong vertex count");
  }
  return Triangulation::from_rotations(std::move(rotations));
}

std::string format_code(const CanonicalCode& c) {
  std::string out;
  for (std::size_t i = 0; i < c.code.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.code[i]);
  }
  return out;
}

CanonicalCode parse_code(std::string_view text, bool mirror_mode) {
  CanonicalCode c;
  c.mirror_mode = mirror_mode;
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(1, 1, "empty code");
  std::size_t pos = 0;
  while (pos < text.size()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 0) throw ParseError(1, pos + 1, "expected an integer");
    c.code.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size()) {
      if (text[pos] != ' ') throw ParseError(1, pos + 1, "expected a single space");
      ++pos;
    }
  }
  return c;
}

}  // namespace flipgraph
