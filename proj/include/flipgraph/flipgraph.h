/*
 * C interface to the flipgraph library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return an fg_status; on failure the
 * message is available from fg_last_error() on the same thread. Arrays and
 * strings handed out by the library are released with fg_free().
 */
#ifndef FLIPGRAPH_FLIPGRAPH_H
#define FLIPGRAPH_FLIPGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(FLIPGRAPH_BUILDING_LIBRARY)
#define FG_API __attribute__((visibility("default")))
#else
#define FG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fg_status {
  FG_OK = 0,
  FG_ERR_INVALID_ARGUMENT = 1,
  FG_ERR_PARSE = 2,
  FG_ERR_VALIDATION = 3,
  FG_ERR_NOT_AN_EDGE = 4,
  FG_ERR_INVALID_FLIP = 5,
  FG_ERR_NOT_FOUND = 6,
  FG_ERR_DISCONNECTED = 7,
  FG_ERR_RESOURCE_LIMIT = 8,
  FG_ERR_CATALOG_FORMAT = 9,
  FG_ERR_MODE_MISMATCH = 10,
  FG_ERR_IO = 11,
  FG_ERR_INTERNAL = 99
} fg_status;

typedef struct fg_triangulation fg_triangulation;
typedef struct fg_catalog fg_catalog;

FG_API const char* fg_version(void);
FG_API const char* fg_status_name(fg_status status);
FG_API const char* fg_last_error(void);
FG_API void fg_free(void* p);

/* ---- triangulations ---------------------------------------------------- */

FG_API fg_status fg_tri_parse(const char* text, size_t length, fg_triangulation** out);
/* offsets has n+1 entries; neighbors[offsets[v]..offsets[v+1]) is the
 * clockwise rotation of v. */
FG_API fg_status fg_tri_from_rotations(int n, const int* offsets, const int* neighbors,
                                       fg_triangulation** out);
FG_API void fg_tri_free(fg_triangulation* t);

/* ASCII rotation format, including the blue block for colored inputs. */
FG_API fg_status fg_tri_format(const fg_triangulation* t, char** text);
FG_API int fg_tri_vertex_count(const fg_triangulation* t);
FG_API int fg_tri_edge_count(const fg_triangulation* t);
FG_API int fg_tri_face_count(const fg_triangulation* t);
FG_API int fg_tri_max_degree(const fg_triangulation* t);
FG_API fg_status fg_tri_degree(const fg_triangulation* t, int v, int* degree);
/* -1 when the triangulation carries no coloring. */
FG_API int fg_tri_blue_count(const fg_triangulation* t);
/* 2*count ints, sorted (u < v). */
FG_API fg_status fg_tri_edges(const fg_triangulation* t, int** pairs, size_t* count);

/* On FG_ERR_INVALID_FLIP / FG_ERR_NOT_AN_EDGE *out is left untouched. */
FG_API fg_status fg_tri_flip(const fg_triangulation* t, int a, int b, fg_triangulation** out,
                             int* new_u, int* new_v);
/* pairs holds 2*count vertex ids. *failed_index receives the index of the
 * offending flip on failure (may be NULL). */
FG_API fg_status fg_tri_apply(const fg_triangulation* t, const int* pairs, size_t count,
                              fg_triangulation** out, size_t* failed_index);
FG_API fg_status fg_tri_canonical_code(const fg_triangulation* t, int mirror_mode, int** code,
                                       size_t* length);

/* ---- constructions ----------------------------------------------------- */

typedef enum fg_family { FG_FAMILY_G1 = 0, FG_FAMILY_G2 = 1, FG_FAMILY_HOST = 2 } fg_family;

FG_API fg_status fg_generate(fg_family family, int n, fg_triangulation** out);
/* Apex ids of a G2 triangulation produced by fg_generate. */
FG_API fg_status fg_g2_apexes(const fg_triangulation* t, int* a, int* b);

typedef struct fg_lemma2_report {
  int n;
  int blue_count;
  int max_degree;
  int max_blue_neighbors;
  int max_red_neighbors;
  int red_independent;
  long long bound;
  int passed;
} fg_lemma2_report;

/* Requires a colored triangulation. violations (optional) receives a
 * newline-separated list. */
FG_API fg_status fg_check_lemma2(const fg_triangulation* g1, fg_lemma2_report* report,
                                 char** violations);

/* ---- flip graph -------------------------------------------------------- */

typedef struct fg_enumerate_options {
  int mirror_mode;
  int workers;
  uint64_t max_nodes;
} fg_enumerate_options;

FG_API void fg_enumerate_options_init(fg_enumerate_options* options);
/* nodes_found (optional) receives the partial count on FG_ERR_RESOURCE_LIMIT. */
FG_API fg_status fg_catalog_enumerate(int n, const fg_enumerate_options* options,
                                      fg_catalog** out, uint64_t* nodes_found);
FG_API void fg_catalog_free(fg_catalog* c);
FG_API fg_status fg_catalog_save(const fg_catalog* c, const char* path);
/* expected_mirror: 0 or 1 to require a mode, -1 to accept either. */
FG_API fg_status fg_catalog_load(const char* path, int expected_mirror, fg_catalog** out);
FG_API int fg_catalog_n(const fg_catalog* c);
FG_API int fg_catalog_mirror_mode(const fg_catalog* c);
FG_API uint64_t fg_catalog_node_count(const fg_catalog* c);
FG_API uint64_t fg_catalog_edge_count(const fg_catalog* c);
FG_API uint32_t fg_catalog_seed(const fg_catalog* c);
FG_API fg_status fg_catalog_node(const fg_catalog* c, uint32_t id, fg_triangulation** out);
FG_API fg_status fg_catalog_find(const fg_catalog* c, const fg_triangulation* t, uint32_t* id);
FG_API fg_status fg_catalog_distance(const fg_catalog* c, const fg_triangulation* a,
                                     const fg_triangulation* b, int* distance);
FG_API fg_status fg_catalog_diameter(const fg_catalog* c, int workers, int* diameter,
                                     uint32_t* from, uint32_t* to);

/* ---- common edges and bounds ------------------------------------------- */

FG_API fg_status fg_common_edges(const fg_triangulation* a, const fg_triangulation* b,
                                 const int* forward, size_t n, int* common);

typedef struct fg_maxcommon_options {
  uint64_t node_budget;   /* 0 = unlimited */
  int64_t time_budget_ms; /* 0 = unlimited */
  int workers;
  int local_search_restarts;
  uint64_t seed;
} fg_maxcommon_options;

typedef struct fg_maxcommon_result {
  int lower;
  int upper;
  int exact;
  int flip_lower_bound; /* 3n - 6 - upper */
  uint64_t nodes_explored;
} fg_maxcommon_result;

FG_API void fg_maxcommon_options_init(fg_maxcommon_options* options);
/* witness (optional) receives n ints. */
FG_API fg_status fg_max_common_edges(const fg_triangulation* a, const fg_triangulation* b,
                                     const fg_maxcommon_options* options,
                                     fg_maxcommon_result* result, int** witness);

typedef struct fg_theorem_bound {
  long long n;
  long long common_edge_bound;
  long long flip_bound;
  long long relaxed_times_three;
  long long relaxed_ceil;
  int holds;
} fg_theorem_bound;

FG_API fg_status fg_theorem_bound_compute(long long n, fg_theorem_bound* out);

/* ---- path covers and matchings ----------------------------------------- */

/* Paths are returned flattened: vertices (n ints) and lengths (count ints). */
FG_API fg_status fg_path_cover(const fg_triangulation* t, int exact, int** vertices,
                               int** lengths, size_t* count);

typedef struct fg_path_mapping {
  int paths;
  int guaranteed;
  int common;
} fg_path_mapping;

/* Maps h onto the n-vertex G2 along a (greedy or exact) path cover. */
FG_API fg_status fg_path_cover_mapping(const fg_triangulation* h, int exact,
                                       fg_path_mapping* result, int** forward);
FG_API fg_status fg_max_matching(const fg_triangulation* t, int** pairs, size_t* count);
FG_API fg_status fg_matching_mapping(const fg_triangulation* a, const fg_triangulation* b,
                                     int* k, int* common, int** forward);

/* ---- verification ------------------------------------------------------ */

typedef struct fg_verify_options {
  int max_enumerate_n;
  int max_soundness_n;
  int max_g1_n;
  int mirror_mode;
  int workers;
} fg_verify_options;

FG_API void fg_verify_options_init(fg_verify_options* options);
/* report: one "check<TAB>pass|FAIL<TAB>detail" line per row. */
FG_API fg_status fg_verify(const fg_verify_options* options, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* FLIPGRAPH_FLIPGRAPH_H */
