#pragma once

#include <string>
#include <vector>

namespace flipgraph {

struct VerifyOptions {
  int max_enumerate_n = 9;
  int max_soundness_n = 7;
  int max_g1_n = 300;
  bool mirror_mode = true;
  int workers = 1;
};

struct VerifyRow {
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Small-n end-to-end check: enumeration counts, exact distances against the
/// common-edge flip bound, and the G1/G2 structure.
std::vector<VerifyRow> run_verify(const VerifyOptions& options);

/// Published counts of simplicial polyhedra (triangulations of the sphere up
/// to all isomorphisms) for n = 4..12; -1 outside that range.
long long published_triangulation_count(int n);

}  // namespace flipgraph
