#include "flipgraph/flipgraph.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "flipgraph/canonical.hpp"
#include "flipgraph/common_edges.hpp"
#include "flipgraph/constructions.hpp"
#include "flipgraph/covers.hpp"
#include "flipgraph/flip_graph.hpp"
#include "flipgraph/verify.hpp"

struct fg_triangulation {
  flipgraph::Triangulation tri;
  std::optional<int> blue_count;
  std::optional<flipgraph::DoubleApexTriangulation> g2;
};

struct fg_catalog {
  flipgraph::FlipGraphCatalog catalog;
};

namespace {

using namespace flipgraph;

thread_local std::string last_error;

fg_status fail(fg_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps exceptions escaping `body` onto status codes.
template <class Body>
fg_status guard(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(FG_ERR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return fail(FG_ERR_VALIDATION, e.what());
  } catch (const SequenceError& e) {
    return fail(e.flip_error() == FlipError::not_an_edge ? FG_ERR_NOT_AN_EDGE : FG_ERR_INVALID_FLIP,
                e.what());
  } catch (const ResourceLimitError& e) {
    return fail(FG_ERR_RESOURCE_LIMIT, e.what());
  } catch (const NodeNotFoundError& e) {
    return fail(FG_ERR_NOT_FOUND, e.what());
  } catch (const DisconnectedError& e) {
    return fail(FG_ERR_DISCONNECTED, e.what());
  } catch (const CatalogFormatError& e) {
    switch (e.kind()) {
      case CatalogFormatError::Kind::mode_mismatch: return fail(FG_ERR_MODE_MISMATCH, e.what());
      case CatalogFormatError::Kind::io: return fail(FG_ERR_IO, e.what());
      default: return fail(FG_ERR_CATALOG_FORMAT, e.what());
    }
  } catch (const std::invalid_argument& e) {
    return fail(FG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(FG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FG_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(FG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FG_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
T* copy_out(const T* data, std::size_t count) {
  auto* out = static_cast<T*>(std::malloc(sizeof(T) * (count ? count : 1)));
  if (!out) throw std::bad_alloc();
  if (count) std::memcpy(out, data, sizeof(T) * count);
  return out;
}

char* copy_string(const std::string& s) { return copy_out(s.c_str(), s.size() + 1); }

int* copy_ints(const std::vector<int>& v) { return copy_out(v.data(), v.size()); }

}  // namespace

extern "C" {

const char* fg_version(void) { return "1.0.0"; }

const char* fg_status_name(fg_status status) {
  switch (status) {
    case FG_OK: return "ok";
    case FG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FG_ERR_PARSE: return "parse error";
    case FG_ERR_VALIDATION: return "validation error";
    case FG_ERR_NOT_AN_EDGE: return "not an edge";
    case FG_ERR_INVALID_FLIP: return "invalid flip";
    case FG_ERR_NOT_FOUND: return "not found";
    case FG_ERR_DISCONNECTED: return "disconnected";
    case FG_ERR_RESOURCE_LIMIT: return "resource limit";
    case FG_ERR_CATALOG_FORMAT: return "catalog format error";
    case FG_ERR_MODE_MISMATCH: return "mirror mode mismatch";
    case FG_ERR_IO: return "i/o error";
    case FG_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* fg_last_error(void) { return last_error.c_str(); }

void fg_free(void* p) { std::free(p); }

fg_status fg_tri_parse(const char* text, size_t length, fg_triangulation** out) {
  if (!text || !out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const std::string_view view(text, length);
    auto t = parse_triangulation(view);
    auto* handle = new fg_triangulation{std::move(t), parse_blue_block(view), std::nullopt};
    if (handle->blue_count && (*handle->blue_count < 0 ||
                               *handle->blue_count > handle->tri.vertex_count())) {
      handle->blue_count.reset();
    }
    *out = handle;
    return FG_OK;
  });
}

fg_status fg_tri_from_rotations(int n, const int* offsets, const int* neighbors,
                                fg_triangulation** out) {
  if (!offsets || !neighbors || !out || n < 0) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::vector<std::vector<Vertex>> rotations(n);
    for (int v = 0; v < n; ++v) {
      if (offsets[v + 1] < offsets[v]) return fail(FG_ERR_INVALID_ARGUMENT, "offsets not monotone");
      rotations[v].assign(neighbors + offsets[v], neighbors + offsets[v + 1]);
    }
    *out = new fg_triangulation{Triangulation::from_rotations(std::move(rotations)), std::nullopt,
                                std::nullopt};
    return FG_OK;
  });
}

void fg_tri_free(fg_triangulation* t) { delete t; }

fg_status fg_tri_format(const fg_triangulation* t, char** text) {
  if (!t || !text) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::vector<std::string> comments;
    if (t->blue_count) comments.push_back("# blue 0.." + std::to_string(*t->blue_count - 1));
    *text = copy_string(format_triangulation(t->tri, comments));
    return FG_OK;
  });
}

int fg_tri_vertex_count(const fg_triangulation* t) { return t ? t->tri.vertex_count() : -1; }

int fg_tri_edge_count(const fg_triangulation* t) {
  return t ? static_cast<int>(t->tri.edge_count()) : -1;
}

int fg_tri_face_count(const fg_triangulation* t) {
  return t ? static_cast<int>(t->tri.faces().size()) : -1;
}

int fg_tri_max_degree(const fg_triangulation* t) { return t ? t->tri.max_degree() : -1; }

fg_status fg_tri_degree(const fg_triangulation* t, int v, int* degree) {
  if (!t || !degree) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    *degree = t->tri.degree(v);
    return FG_OK;
  });
}

int fg_tri_blue_count(const fg_triangulation* t) {
  return t && t->blue_count ? *t->blue_count : -1;
}

fg_status fg_tri_edges(const fg_triangulation* t, int** pairs, size_t* count) {
  if (!t || !pairs || !count) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::vector<int> flat;
    for (const Edge e : t->tri.edges()) {
      flat.push_back(e.u);
      flat.push_back(e.v);
    }
    *pairs = copy_ints(flat);
    *count = flat.size() / 2;
    return FG_OK;
  });
}

fg_status fg_tri_flip(const fg_triangulation* t, int a, int b, fg_triangulation** out, int* new_u,
                      int* new_v) {
  if (!t || !out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto r = flip(t->tri, Edge{a, b});
    if (!r) {
      const std::string msg = "flip (" + std::to_string(a) + "," + std::to_string(b) + "): " +
                              std::string(to_string(r.error));
      return fail(r.error == FlipError::not_an_edge ? FG_ERR_NOT_AN_EDGE : FG_ERR_INVALID_FLIP, msg);
    }
    if (new_u) *new_u = r.inserted.u;
    if (new_v) *new_v = r.inserted.v;
    *out = new fg_triangulation{std::move(*r.triangulation), t->blue_count, std::nullopt};
    return FG_OK;
  });
}

fg_status fg_tri_apply(const fg_triangulation* t, const int* pairs, size_t count,
                       fg_triangulation** out, size_t* failed_index) {
  if (!t || !out || (count && !pairs)) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    FlipSequence seq;
    for (size_t i = 0; i < count; ++i) seq.push_back({pairs[2 * i], pairs[2 * i + 1]});
    try {
      *out = new fg_triangulation{apply_sequence(t->tri, seq), t->blue_count, std::nullopt};
    } catch (const SequenceError& e) {
      if (failed_index) *failed_index = e.index();
      throw;
    }
    return FG_OK;
  });
}

fg_status fg_tri_canonical_code(const fg_triangulation* t, int mirror_mode, int** code,
                                size_t* length) {
  if (!t || !code || !length) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto c = canonical_code(t->tri, mirror_mode != 0);
    *code = copy_ints(c.code);
    *length = c.code.size();
    return FG_OK;
  });
}

fg_status fg_generate(fg_family family, int n, fg_triangulation** out) {
  if (!out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    switch (family) {
      case FG_FAMILY_G1: {
        auto g1 = build_g1(n);
        *out = new fg_triangulation{std::move(g1.base), g1.blue_count, std::nullopt};
        return FG_OK;
      }
      case FG_FAMILY_G2: {
        auto g2 = build_g2(n);
        *out = new fg_triangulation{g2.base, std::nullopt, std::move(g2)};
        return FG_OK;
      }
      case FG_FAMILY_HOST:
        *out = new fg_triangulation{host_max_deg6(n), std::nullopt, std::nullopt};
        return FG_OK;
    }
    return fail(FG_ERR_INVALID_ARGUMENT, "unknown family");
  });
}

fg_status fg_g2_apexes(const fg_triangulation* t, int* a, int* b) {
  if (!t || !a || !b) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  if (!t->g2) return fail(FG_ERR_INVALID_ARGUMENT, "not a generated G2 triangulation");
  *a = t->g2->apex_a;
  *b = t->g2->apex_b;
  return FG_OK;
}

fg_status fg_check_lemma2(const fg_triangulation* g1, fg_lemma2_report* report,
                          char** violations) {
  if (!g1 || !report) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  if (!g1->blue_count) return fail(FG_ERR_INVALID_ARGUMENT, "triangulation carries no coloring");
  return guard([&] {
    ColoredTriangulation colored{g1->tri, std::vector<Color>(g1->tri.vertex_count(), Color::red),
                                 *g1->blue_count};
    std::fill(colored.color.begin(), colored.color.begin() + *g1->blue_count, Color::blue);
    const auto r = check_lemma2_structure(colored);
    *report = fg_lemma2_report{r.n,
                               r.blue_count,
                               r.max_degree,
                               r.max_blue_neighbors,
                               r.max_red_neighbors,
                               r.red_independent ? 1 : 0,
                               r.bound,
                               r.passed() ? 1 : 0};
    if (violations) {
      std::string joined;
      for (const auto& v : r.violations) joined += v + "\n";
      *violations = copy_string(joined);
    }
    return FG_OK;
  });
}

void fg_enumerate_options_init(fg_enumerate_options* options) {
  if (!options) return;
  const EnumerateOptions defaults;
  options->mirror_mode = defaults.mirror_mode ? 1 : 0;
  options->workers = defaults.workers;
  options->max_nodes = defaults.max_nodes;
}

fg_status fg_catalog_enumerate(int n, const fg_enumerate_options* options, fg_catalog** out,
                               uint64_t* nodes_found) {
  if (!out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    EnumerateOptions eo;
    if (options) {
      eo.mirror_mode = options->mirror_mode != 0;
      eo.workers = options->workers;
      eo.max_nodes = options->max_nodes;
    }
    try {
      *out = new fg_catalog{enumerate(n, eo)};
    } catch (const ResourceLimitError& e) {
      if (nodes_found) *nodes_found = e.nodes_found();
      throw;
    }
    return FG_OK;
  });
}

void fg_catalog_free(fg_catalog* c) { delete c; }

fg_status fg_catalog_save(const fg_catalog* c, const char* path) {
  if (!c || !path) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    save_catalog(c->catalog, path);
    return FG_OK;
  });
}

fg_status fg_catalog_load(const char* path, int expected_mirror, fg_catalog** out) {
  if (!path || !out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::optional<bool> mode;
    if (expected_mirror >= 0) mode = expected_mirror != 0;
    *out = new fg_catalog{load_catalog(path, mode)};
    return FG_OK;
  });
}

int fg_catalog_n(const fg_catalog* c) { return c ? c->catalog.n : -1; }
int fg_catalog_mirror_mode(const fg_catalog* c) { return c ? (c->catalog.mirror_mode ? 1 : 0) : -1; }
uint64_t fg_catalog_node_count(const fg_catalog* c) { return c ? c->catalog.node_count() : 0; }
uint64_t fg_catalog_edge_count(const fg_catalog* c) { return c ? c->catalog.edge_count() : 0; }
uint32_t fg_catalog_seed(const fg_catalog* c) { return c ? c->catalog.seed : 0; }

fg_status fg_catalog_node(const fg_catalog* c, uint32_t id, fg_triangulation** out) {
  if (!c || !out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  if (id >= c->catalog.node_count()) return fail(FG_ERR_NOT_FOUND, "node id out of range");
  return guard([&] {
    *out = new fg_triangulation{decode(c->catalog.nodes[id]), std::nullopt, std::nullopt};
    return FG_OK;
  });
}

fg_status fg_catalog_find(const fg_catalog* c, const fg_triangulation* t, uint32_t* id) {
  if (!c || !t || !id) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    *id = c->catalog.node_of(t->tri);
    return FG_OK;
  });
}

fg_status fg_catalog_distance(const fg_catalog* c, const fg_triangulation* a,
                              const fg_triangulation* b, int* distance_out) {
  if (!c || !a || !b || !distance_out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    *distance_out = distance(c->catalog, a->tri, b->tri);
    return FG_OK;
  });
}

fg_status fg_catalog_diameter(const fg_catalog* c, int workers, int* diameter_out, uint32_t* from,
                              uint32_t* to) {
  if (!c || !diameter_out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto d = diameter(c->catalog, workers);
    *diameter_out = d.diameter;
    if (from) *from = d.from;
    if (to) *to = d.to;
    return FG_OK;
  });
}

fg_status fg_common_edges(const fg_triangulation* a, const fg_triangulation* b, const int* forward,
                          size_t n, int* common) {
  if (!a || !b || !forward || !common) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    *common = common_edges(a->tri, b->tri, std::span<const int>(forward, n));
    return FG_OK;
  });
}

void fg_maxcommon_options_init(fg_maxcommon_options* options) {
  if (!options) return;
  const MaxCommonOptions defaults;
  options->node_budget = defaults.node_budget;
  options->time_budget_ms = defaults.time_budget.count();
  options->workers = defaults.workers;
  options->local_search_restarts = defaults.local_search_restarts;
  options->seed = defaults.seed;
}

fg_status fg_max_common_edges(const fg_triangulation* a, const fg_triangulation* b,
                              const fg_maxcommon_options* options, fg_maxcommon_result* result,
                              int** witness) {
  if (!a || !b || !result) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    MaxCommonOptions mo;
    if (options) {
      mo.node_budget = options->node_budget;
      mo.time_budget = std::chrono::milliseconds(options->time_budget_ms);
      mo.workers = options->workers;
      mo.local_search_restarts = options->local_search_restarts;
      mo.seed = options->seed;
    }
    const auto mc = max_common_edges(a->tri, b->tri, mo);
    const auto lb = lemma1_bound(a->tri, b->tri, mc);
    *result = fg_maxcommon_result{mc.lower, mc.upper, mc.exact ? 1 : 0, lb.value, mc.nodes_explored};
    if (witness) *witness = copy_ints(mc.witness.forward);
    return FG_OK;
  });
}

fg_status fg_theorem_bound_compute(long long n, fg_theorem_bound* out) {
  if (!out) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto b = theorem_bound(n);
    *out = fg_theorem_bound{b.n, b.common_edge_bound, b.flip_bound, b.relaxed_times_three,
                            b.relaxed_ceil, b.holds ? 1 : 0};
    return FG_OK;
  });
}

fg_status fg_path_cover(const fg_triangulation* t, int exact, int** vertices, int** lengths,
                        size_t* count) {
  if (!t || !vertices || !lengths || !count) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto cover = exact ? exact_path_cover(t->tri) : path_cover(t->tri);
    std::vector<int> flat;
    std::vector<int> sizes;
    for (const auto& p : cover.paths) {
      flat.insert(flat.end(), p.begin(), p.end());
      sizes.push_back(static_cast<int>(p.size()));
    }
    *vertices = copy_ints(flat);
    *lengths = copy_ints(sizes);
    *count = sizes.size();
    return FG_OK;
  });
}

fg_status fg_path_cover_mapping(const fg_triangulation* h, int exact, fg_path_mapping* result,
                                int** forward) {
  if (!h || !result) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto cover = exact ? exact_path_cover(h->tri) : path_cover(h->tri);
    const auto g2 = build_g2(h->tri.vertex_count());
    const auto m = path_cover_mapping(h->tri, cover, g2);
    *result = fg_path_mapping{m.paths, m.guaranteed, *m.gamma.common};
    if (forward) *forward = copy_ints(m.gamma.forward);
    return FG_OK;
  });
}

fg_status fg_max_matching(const fg_triangulation* t, int** pairs, size_t* count) {
  if (!t || !pairs || !count) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::vector<int> flat;
    for (const Edge e : max_matching(t->tri)) {
      flat.push_back(e.u);
      flat.push_back(e.v);
    }
    *pairs = copy_ints(flat);
    *count = flat.size() / 2;
    return FG_OK;
  });
}

fg_status fg_matching_mapping(const fg_triangulation* a, const fg_triangulation* b, int* k,
                              int* common, int** forward) {
  if (!a || !b || !k || !common) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto m = matching_mapping(a->tri, b->tri);
    *k = m.k;
    *common = *m.gamma.common;
    if (forward) *forward = copy_ints(m.gamma.forward);
    return FG_OK;
  });
}

void fg_verify_options_init(fg_verify_options* options) {
  if (!options) return;
  const VerifyOptions defaults;
  options->max_enumerate_n = defaults.max_enumerate_n;
  options->max_soundness_n = defaults.max_soundness_n;
  options->max_g1_n = defaults.max_g1_n;
  options->mirror_mode = defaults.mirror_mode ? 1 : 0;
  options->workers = defaults.workers;
}

fg_status fg_verify(const fg_verify_options* options, char** report, int* all_passed) {
  if (!report || !all_passed) return fail(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    VerifyOptions vo;
    if (options) {
      vo.max_enumerate_n = options->max_enumerate_n;
      vo.max_soundness_n = options->max_soundness_n;
      vo.max_g1_n = options->max_g1_n;
      vo.mirror_mode = options->mirror_mode != 0;
      vo.workers = options->workers;
    }
    std::string text;
    bool ok = true;
    for (const auto& row : run_verify(vo)) {
      ok = ok && row.passed;
      text += row.check + "\t" + (row.passed ? "pass" : "FAIL") + "\t" + row.detail + "\n";
    }
    *report = copy_string(text);
    *all_passed = ok ? 1 : 0;
    return FG_OK;
  });
}

}  // extern "C"
