#include "flipgraph/verify.hpp"

#include <sstream>

#include "flipgraph/common_edges.hpp"
#include "flipgraph/constructions.hpp"
#include "flipgraph/covers.hpp"
#include "flipgraph/flip_graph.hpp"

namespace flipgraph {

long long published_triangulation_count(int n) {
  // OEIS A000109
  static constexpr long long counts[] = {1, 1, 2, 5, 14, 50, 233, 1249, 7595};
  if (n < 4 || n > 12) return -1;
  return counts[n - 4];
}

namespace {

VerifyRow theorem_row() {
  for (long long n = 3; n <= 100000; ++n) {
    const auto b = theorem_bound(n);
    if (!b.holds) return {"theorem arithmetic", false, "fails at n=" + std::to_string(n)};
  }
  const auto b30 = theorem_bound(30);
  const bool spot = b30.flip_bound == 36 && b30.relaxed_times_three == 108;
  return {"theorem arithmetic", spot, "n=3..100000 hold; n=30 -> " + std::to_string(b30.flip_bound)};
}

VerifyRow constructions_row(int max_n) {
  for (int n = 6; n <= max_n; ++n) {
    const auto report = check_lemma2_structure(build_g1(n));
    if (!report.passed()) {
      return {"G1 structure", false, "n=" + std::to_string(n) + ": " + report.violations.front()};
    }
    if (build_g1(n).base.vertex_count() != n) {
      return {"G1 structure", false, "wrong vertex count at n=" + std::to_string(n)};
    }
  }
  for (int n = 4; n <= max_n; ++n) {
    const auto g2 = build_g2(n);
    if (g2.base.degree(g2.apex_a) != n - 1 || g2.base.degree(g2.apex_b) != n - 1) {
      return {"G2 structure", false, "apex degree wrong at n=" + std::to_string(n)};
    }
  }
  return {"G1/G2 structure", true, "n up to " + std::to_string(max_n)};
}

}  // namespace

std::vector<VerifyRow> run_verify(const VerifyOptions& options) {
  std::vector<VerifyRow> rows;
  rows.push_back(theorem_row());
  rows.push_back(constructions_row(options.max_g1_n));

  for (int n = 4; n <= options.max_enumerate_n; ++n) {
    EnumerateOptions eo;
    eo.mirror_mode = options.mirror_mode;
    eo.workers = options.workers;
    const auto catalog = enumerate(n, eo);
    std::ostringstream detail;
    detail << catalog.node_count() << " nodes, " << catalog.edge_count() << " edges";
    bool ok = true;
    if (options.mirror_mode && published_triangulation_count(n) >= 0) {
      ok = static_cast<long long>(catalog.node_count()) == published_triangulation_count(n);
      detail << " (published " << published_triangulation_count(n) << ")";
    }
    const auto d = diameter(catalog, options.workers);
    detail << ", diameter " << d.diameter;
    rows.push_back({"enumerate n=" + std::to_string(n), ok, detail.str()});

    if (n > options.max_soundness_n) continue;
    std::vector<Triangulation> nodes;
    for (const auto& code : catalog.nodes) nodes.push_back(decode(code));
    int violations = 0;
    int pairs = 0;
    int matching_findings = 0;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      const auto dist = bfs_distances(catalog, static_cast<NodeId>(a));
      for (std::size_t b = a; b < nodes.size(); ++b) {
        MaxCommonOptions mo;
        mo.workers = options.workers;
        const auto mc = max_common_edges(nodes[a], nodes[b], mo);
        const auto bound = lemma1_bound(nodes[a], nodes[b], mc);
        ++pairs;
        if (!mc.exact || bound.value > dist[b]) ++violations;
      }
      if (n >= 6 && static_cast<int>(max_matching(nodes[a]).size()) < (n + 4) / 3) {
        ++matching_findings;
      }
    }
    rows.push_back({"soundness n=" + std::to_string(n), violations == 0,
                    std::to_string(pairs) + " pairs, " + std::to_string(violations) +
                        " violations, " + std::to_string(matching_findings) +
                        " matching-bound findings"});
  }
  return rows;
}

}  // namespace flipgraph
