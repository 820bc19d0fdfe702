/*
 * petalkit C API.
 *
 * Every fallible function returns a pk_status. On failure the thread-local
 * message from pk_last_error() describes the problem and output parameters
 * are left untouched. Handles are opaque and owned by the caller; release
 * them with the matching *_free function. Strings returned through char**
 * outputs are NUL-terminated and must be released with pk_string_free().
 */
#ifndef PETALKIT_H
#define PETALKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(PETALKIT_BUILDING_LIBRARY)
#define PK_API __attribute__((visibility("default")))
#else
#define PK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values mirror petalkit::ErrorCode. */
typedef enum pk_status {
  PK_OK = 0,
  PK_NOT_A_PERMUTATION = 1,
  PK_EVEN_LENGTH = 2,
  PK_ODD_LENGTH = 3,
  PK_INVALID_ROTATION = 4,
  PK_LEVEL_OUT_OF_RANGE = 5,
  PK_POSITION_OUT_OF_RANGE = 6,
  PK_NOT_CONSECUTIVE_PAIR = 7,
  PK_SINGLETON_UNDERFLOW = 8,
  PK_PAIRS_NOT_FOUND = 9,
  PK_BASEPOINT_PAIR_INVOLVED = 10,
  PK_NESTING_VIOLATION = 11,
  PK_BAD_LEVELS = 12,
  PK_NOT_APPLICABLE = 13,
  PK_DO_NOT_CROSS = 14,
  PK_DEGENERATE_DIAGRAM = 15,
  PK_INVARIANT_MISMATCH = 16,
  PK_BOUNDS_EXHAUSTED = 17,
  PK_ILLEGAL_MOVE_AT_STEP = 18,
  PK_REPLAY_MISMATCH_AT_STEP = 19,
  PK_INVARIANT_CHANGED_AT_STEP = 20,
  PK_INVALID_CONFIG = 21,
  PK_PARSE_ERROR = 22,
  PK_IO_ERROR = 23,
  PK_INTERNAL = 24,
  PK_NULL_ARGUMENT = 100
} pk_status;

typedef enum pk_side { PK_SIDE_LEFT = 0, PK_SIDE_RIGHT = 1 } pk_side;

typedef struct pk_petal pk_petal;
typedef struct pk_stem pk_stem;
typedef struct pk_diagram pk_diagram;

typedef struct pk_search_config {
  size_t petal_bound;
  size_t depth_bound;
  int bidirectional;
  int invariant_prefilter;
  unsigned threads;
} pk_search_config;

PK_API const char* pk_version(void);
/* Stable machine-readable name, e.g. "NotAPermutation". */
PK_API const char* pk_status_name(pk_status status);
PK_API const char* pk_last_error(void);
PK_API void pk_string_free(char* s);

/* Defaults: petal_bound 9, depth_bound 6, unidirectional, prefilter on. */
PK_API void pk_search_config_init(pk_search_config* cfg);

/* Petal permutations. Inputs are canonicalized (rotated to start at 0). */
PK_API pk_status pk_petal_new(const int32_t* levels, size_t len, pk_petal** out);
/* "3,1,4,2,0", "(3,1,4,2,0)" or a JSON petal word. */
PK_API pk_status pk_petal_parse(const char* text, pk_petal** out);
PK_API pk_status pk_petal_clone(const pk_petal* p, pk_petal** out);
PK_API void pk_petal_free(pk_petal* p);
PK_API size_t pk_petal_length(const pk_petal* p);
/* Copies up to cap levels into buf; *len receives the full length. */
PK_API pk_status pk_petal_levels(const pk_petal* p, int32_t* buf, size_t cap, size_t* len);
PK_API int pk_petal_equal(const pk_petal* a, const pk_petal* b);
PK_API pk_status pk_petal_to_string(const pk_petal* p, char** out);
PK_API pk_status pk_petal_to_json(const pk_petal* p, char** out);
/* Lowercase hex of the canonical key. */
PK_API pk_status pk_petal_canonical_key(const pk_petal* p, char** out);
PK_API pk_status pk_petal_pairing_json(const pk_petal* p, size_t rotation, pk_side side, char** out);
PK_API pk_status pk_petal_correspondence_json(const pk_petal* p, size_t rotation, char** out);
PK_API pk_status pk_petal_to_stem(const pk_petal* p, size_t rotation, int32_t t0, pk_stem** out);
PK_API pk_status pk_random_petal(int32_t n, uint64_t seed, pk_petal** out);

/* Stem permutations. */
PK_API pk_status pk_stem_new(const int32_t* levels, size_t len, pk_stem** out);
PK_API pk_status pk_stem_parse(const char* text, pk_stem** out);
PK_API void pk_stem_free(pk_stem* s);
PK_API size_t pk_stem_length(const pk_stem* s);
PK_API pk_status pk_stem_levels(const pk_stem* s, int32_t* buf, size_t cap, size_t* len);
PK_API pk_status pk_stem_to_string(const pk_stem* s, char** out);
PK_API pk_status pk_stem_to_json(const pk_stem* s, char** out);
PK_API pk_status pk_stem_to_petal(const pk_stem* s, pk_petal** out);
PK_API pk_status pk_stem_strands_json(const pk_stem* s, char** out);

/* Moves. Move and script JSON formats are documented in README.md. */
PK_API pk_status pk_apply_move_json(const pk_petal* p, const char* move_json, pk_petal** out);
PK_API pk_status pk_invert_move_json(const pk_petal* before, const char* move_json, char** out);
/* Returns the path object {"script","steps","end"} for a move script. */
PK_API pk_status pk_apply_script_json(const char* script_json, char** out);
/* level_cap < 0 excludes trivial additions. */
PK_API pk_status pk_enumerate_moves_json(const pk_petal* p, int64_t level_cap, char** out);

/* Reduced stem diagrams. */
PK_API pk_status pk_diagram_from_stem(const pk_stem* s, pk_diagram** out);
/* Default embedding: rotation 0, basepoint level 0. */
PK_API pk_status pk_diagram_from_petal(const pk_petal* p, pk_diagram** out);
PK_API void pk_diagram_free(pk_diagram* d);
PK_API size_t pk_diagram_crossing_count(const pk_diagram* d);
PK_API int pk_diagram_writhe(const pk_diagram* d);
PK_API pk_status pk_diagram_json(const pk_diagram* d, char** out);
/* {"gauss":[...],"signs":[...]} */
PK_API pk_status pk_diagram_gauss_json(const pk_diagram* d, char** out);
/* "PD[X[..], ...]" */
PK_API pk_status pk_diagram_pd_text(const pk_diagram* d, char** out);

/* Alexander polynomial: coefficients lowest degree first. */
PK_API pk_status pk_alexander_of_petal(const pk_petal* p, int64_t* coeffs, size_t cap,
                                       size_t* len, uint64_t* determinant);
/* {"alexander":[...],"determinant":d} */
PK_API pk_status pk_alexander_json(const pk_diagram* d, char** out);

/* Search. On success *out is the path object. */
PK_API pk_status pk_find_path_json(const pk_petal* from, const pk_petal* to,
                                   const pk_search_config* cfg, char** out);
/* Verifies a script or path object. On a step failure the status names the
 * failure and *failed_step (if non-null) receives the 1-based step. */
PK_API pk_status pk_verify_path_json(const char* path_json, int check_invariants,
                                     size_t* move_count, size_t* failed_step);

#ifdef __cplusplus
}
#endif

#endif /* PETALKIT_H */
