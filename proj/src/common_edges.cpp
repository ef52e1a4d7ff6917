#include "flipgraph/common_edges.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "parallel.hpp"

namespace flipgraph {

namespace {

// Dense exact search is limited to this size; larger inputs only get the
// local-search witness and the degree-pairing bound.
constexpr int kDenseLimit = 2048;

class DenseGraph {
 public:
  explicit DenseGraph(const Triangulation& t)
      : n_(t.vertex_count()), adj_(static_cast<std::size_t>(n_) * n_, 0), neighbors_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      for (const Vertex w : t.rotation(v)) {
        adj_[static_cast<std::size_t>(v) * n_ + w] = 1;
        neighbors_[v].push_back(w);
      }
    }
  }
  bool edge(Vertex a, Vertex b) const { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> neighbors_;
};

void check_bijection(const Triangulation& first, const Triangulation& second,
                     std::span<const Vertex> forward) {
  const int n = first.vertex_count();
  if (second.vertex_count() != n) {
    throw std::invalid_argument("triangulations differ in size (" + std::to_string(n) + " vs " +
                                std::to_string(second.vertex_count()) + ")");
  }
  if (static_cast<int>(forward.size()) != n) {
    throw std::invalid_argument("mapping has " + std::to_string(forward.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<char> hit(n, 0);
  for (const Vertex x : forward) {
    if (x < 0 || x >= n || hit[x]) throw std::invalid_argument("mapping is not a bijection");
    hit[x] = 1;
  }
}

// max over bijections of sum_u min(deg1(u), deg2(g(u))) / 2, attained by
// pairing both degree sequences in sorted order.
int degree_pairing_bound(const Triangulation& first, const Triangulation& second) {
  const int n = first.vertex_count();
  std::vector<int> d1(n);
  std::vector<int> d2(n);
  for (Vertex v = 0; v < n; ++v) {
    d1[v] = first.degree(v);
    d2[v] = second.degree(v);
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  long long sum = 0;
  for (int i = 0; i < n; ++i) sum += std::min(d1[i], d2[i]);
  return static_cast<int>(std::min<long long>(sum / 2, static_cast<long long>(first.edge_count())));
}

std::vector<Vertex> degree_sorted_mapping(const Triangulation& first, const Triangulation& second) {
  const int n = first.vertex_count();
  auto by_degree = [](const Triangulation& t) {
    std::vector<Vertex> order(t.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return t.degree(a) > t.degree(b); });
    return order;
  };
  const auto o1 = by_degree(first);
  const auto o2 = by_degree(second);
  std::vector<Vertex> forward(n);
  for (int i = 0; i < n; ++i) forward[o1[i]] = o2[i];
  return forward;
}

struct SharedState {
  std::atomic<int> incumbent{0};
  std::mutex witness_mutex;
  std::vector<Vertex> witness;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t node_budget = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void offer(int value, const std::vector<Vertex>& assignment) {
    if (value <= incumbent.load()) return;
    std::lock_guard lock(witness_mutex);
    if (value > incumbent.load()) {
      witness = assignment;
      incumbent.store(value);
    }
  }
};

class Search {
 public:
  Search(const DenseGraph& g1, const DenseGraph& g2, const std::vector<Vertex>& order,
         SharedState& shared)
      : g1_(g1),
        g2_(g2),
        n_(g1.size()),
        order_(order),
        shared_(shared),
        assign_(n_, -1),
        owner_(n_, -1),
        count_(static_cast<std::size_t>(n_) * n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      unassigned_edges_ += g1_.degree(v);
      free_edges_ += g2_.degree(v);
    }
    unassigned_edges_ /= 2;
    free_edges_ /= 2;
  }

  struct SubtreeOutcome {
    int bound = 0;
    bool complete = false;
  };

  SubtreeOutcome explore(Vertex root_image) {
    const Vertex u = order_[0];
    place(u, root_image);
    SubtreeOutcome out{bound(1), true};
    if (out.bound > shared_.incumbent.load()) out.complete = descend(1);
    remove(u, root_image);
    return out;
  }

 private:
  int& count(Vertex u, Vertex x) { return count_[static_cast<std::size_t>(u) * n_ + x]; }
  int count(Vertex u, Vertex x) const { return count_[static_cast<std::size_t>(u) * n_ + x]; }

  void place(Vertex u, Vertex x) {
    current_ += count(u, x);
    for (const Vertex w : g1_.neighbors(u)) unassigned_edges_ -= assign_[w] < 0;
    for (const Vertex y : g2_.neighbors(x)) free_edges_ -= owner_[y] < 0;
    assign_[u] = x;
    owner_[x] = u;
    for (const Vertex w : g1_.neighbors(u)) {
      for (const Vertex y : g2_.neighbors(x)) ++count(w, y);
    }
  }

  void remove(Vertex u, Vertex x) {
    for (const Vertex w : g1_.neighbors(u)) {
      for (const Vertex y : g2_.neighbors(x)) --count(w, y);
    }
    assign_[u] = -1;
    owner_[x] = -1;
    for (const Vertex w : g1_.neighbors(u)) unassigned_edges_ += assign_[w] < 0;
    for (const Vertex y : g2_.neighbors(x)) free_edges_ += owner_[y] < 0;
    current_ -= count(u, x);
  }

  // Admissible: each unassigned u gains at most max_x count(u, x) edges
  // towards assigned vertices, and edges among unassigned vertices can only
  // land on edges among free vertices.
  int bound(int depth) const {
    int total = current_;
    for (int k = depth; k < n_; ++k) {
      const Vertex u = order_[k];
      int best = 0;
      for (Vertex x = 0; x < n_; ++x) {
        if (owner_[x] < 0) best = std::max(best, count(u, x));
      }
      total += best;
    }
    return total + std::min(unassigned_edges_, free_edges_);
  }

  bool out_of_budget() {
    const std::uint64_t visited = shared_.nodes.fetch_add(1) + 1;
    if (shared_.stop.load()) return true;
    if (shared_.node_budget && visited > shared_.node_budget) {
      shared_.stop.store(true);
      return true;
    }
    if (shared_.deadline && (visited & 1023) == 0 &&
        std::chrono::steady_clock::now() > *shared_.deadline) {
      shared_.stop.store(true);
      return true;
    }
    return false;
  }

  // Returns false when the budget ran out inside this subtree.
  bool descend(int depth) {
    if (depth == n_) {
      shared_.offer(current_, assign_);
      return true;
    }
    if (out_of_budget()) return false;
    const Vertex u = order_[depth];
    std::vector<Vertex> candidates;
    candidates.reserve(n_);
    for (Vertex x = 0; x < n_; ++x) {
      if (owner_[x] < 0) candidates.push_back(x);
    }
    // Degree-compatible images first; this only orders, never prunes.
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
      return std::abs(g2_.degree(a) - g1_.degree(u)) < std::abs(g2_.degree(b) - g1_.degree(u));
    });
    for (const Vertex x : candidates) {
      place(u, x);
      bool ok = true;
      if (bound(depth + 1) > shared_.incumbent.load()) ok = descend(depth + 1);
      remove(u, x);
      if (!ok) return false;
    }
    return true;
  }

  const DenseGraph& g1_;
  const DenseGraph& g2_;
  int n_;
  const std::vector<Vertex>& order_;
  SharedState& shared_;
  std::vector<Vertex> assign_;
  std::vector<Vertex> owner_;
  std::vector<int> count_;
  int current_ = 0;
  int unassigned_edges_ = 0;
  int free_edges_ = 0;
};

template <class EdgeTest>
int vertex_contribution(const Triangulation& first, const std::vector<Vertex>& f, Vertex v,
                        const EdgeTest& edge2) {
  int c = 0;
  for (const Vertex w : first.rotation(v)) c += edge2(f[v], f[w]);
  return c;
}

}  // namespace

int common_edges(const Triangulation& first, const Triangulation& second,
                 std::span<const Vertex> forward) {
  check_bijection(first, second, forward);
  int c = 0;
  for (const Edge e : first.edges()) c += second.has_edge(forward[e.u], forward[e.v]);
  return c;
}

VertexBijection local_search(const Triangulation& first, const Triangulation& second,
                             std::vector<Vertex> start) {
  check_bijection(first, second, start);
  const int n = first.vertex_count();
  auto edge2 = [&](Vertex a, Vertex b) { return second.has_edge(a, b); };
  std::vector<Vertex>& f = start;
  int value = common_edges(first, second, f);
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        const int shared = first.has_edge(i, j) && edge2(f[i], f[j]) ? 1 : 0;
        const int before = vertex_contribution(first, f, i, edge2) +
                           vertex_contribution(first, f, j, edge2) - shared;
        std::swap(f[i], f[j]);
        const int shared_after = first.has_edge(i, j) && edge2(f[i], f[j]) ? 1 : 0;
        const int after = vertex_contribution(first, f, i, edge2) +
                          vertex_contribution(first, f, j, edge2) - shared_after;
        if (after > before) {
          value += after - before;
          improved = true;
        } else {
          std::swap(f[i], f[j]);
        }
      }
    }
  }
  return VertexBijection{std::move(start), value};
}

MaxCommonResult max_common_edges(const Triangulation& first, const Triangulation& second,
                                 const MaxCommonOptions& options) {
  const int n = first.vertex_count();
  if (second.vertex_count() != n) {
    throw std::invalid_argument("triangulations differ in size (" + std::to_string(n) + " vs " +
                                std::to_string(second.vertex_count()) + ")");
  }
  MaxCommonResult result;
  const int root_bound = degree_pairing_bound(first, second);

  // Warm start.
  VertexBijection best{degree_sorted_mapping(first, second), std::nullopt};
  best.common = common_edges(first, second, best.forward);
  if (n <= kDenseLimit) {
    best = local_search(first, second, best.forward);
    std::mt19937_64 rng(options.seed);
    for (int r = 0; r < options.local_search_restarts && *best.common < root_bound; ++r) {
      std::vector<Vertex> start(n);
      std::iota(start.begin(), start.end(), 0);
      std::shuffle(start.begin(), start.end(), rng);
      auto candidate = local_search(first, second, std::move(start));
      if (*candidate.common > *best.common) best = std::move(candidate);
    }
  }

  if (n > kDenseLimit) {
    result.lower = *best.common;
    result.upper = root_bound;
    result.exact = result.lower == result.upper;
    result.witness = std::move(best);
    return result;
  }

  const DenseGraph g1(first);
  const DenseGraph g2(second);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g1.degree(a) > g1.degree(b); });

  SharedState shared;
  shared.incumbent.store(*best.common);
  shared.witness = best.forward;
  shared.node_budget = options.node_budget;
  if (options.time_budget.count() > 0) {
    shared.deadline = std::chrono::steady_clock::now() + options.time_budget;
  }

  std::vector<Search::SubtreeOutcome> outcomes(n);
  if (*best.common < root_bound) {
    detail::parallel_for(static_cast<std::size_t>(n), options.workers, [&](std::size_t x) {
      Search search(g1, g2, order, shared);
      outcomes[x] = search.explore(static_cast<Vertex>(x));
    });
  } else {
    for (auto& o : outcomes) o = {root_bound, true};
  }

  result.lower = shared.incumbent.load();
  result.upper = result.lower;
  for (const auto& o : outcomes) {
    if (!o.complete) result.upper = std::max(result.upper, std::min(o.bound, root_bound));
  }
  result.exact = result.lower == result.upper;
  result.witness = VertexBijection{shared.witness, result.lower};
  result.nodes_explored = shared.nodes.load();
  return result;
}

FlipLowerBound lemma1_bound(const Triangulation& first, const Triangulation& second,
                            const MaxCommonResult& mc) {
  if (first.vertex_count() != second.vertex_count()) {
    throw std::invalid_argument("triangulations differ in size");
  }
  const int total = 3 * first.vertex_count() - 6;
  return FlipLowerBound{total - mc.upper, mc.exact};
}

TheoremBound theorem_bound(long long n) {
  if (n < 3) throw std::invalid_argument("theorem bound needs n >= 3");
  TheoremBound b;
  b.n = n;
  b.common_edge_bound = 2 * (n / 3) + 28;
  b.flip_bound = 3 * n - 6 - b.common_edge_bound;
  b.relaxed_times_three = 7 * n - 102;
  // ceil(x / 3) for possibly negative x
  b.relaxed_ceil = b.relaxed_times_three >= 0 ? (b.relaxed_times_three + 2) / 3
                                              : -((-b.relaxed_times_three) / 3);
  b.holds = 3 * b.flip_bound >= b.relaxed_times_three;
  return b;
}

}  // namespace flipgraph
