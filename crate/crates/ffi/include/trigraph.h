#ifndef TRIGRAPH_H
#define TRIGRAPH_H

/* Generated by cbindgen from trigraph-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status code of a fallible call.
 */
typedef enum TgStatus {
  TG_STATUS_OK = 0,
  /*
   A required pointer argument was null.
   */
  TG_STATUS_NULL_ARGUMENT = 1,
  /*
   An argument was out of range or otherwise invalid.
   */
  TG_STATUS_INVALID_ARGUMENT = 2,
  /*
   Text input failed to parse.
   */
  TG_STATUS_PARSE_ERROR = 3,
  /*
   The instance exceeds a hard limit (dimension or brute-force order).
   */
  TG_STATUS_TOO_LARGE = 4,
  /*
   The candidate set is not independent or indices are out of range.
   */
  TG_STATUS_VERIFY_FAILED = 5,
} TgStatus;

/*
 Opaque construction handle.
 */
typedef struct TgConstruction TgConstruction;

/*
 Opaque graph handle.
 */
typedef struct TgGraph TgGraph;

/*
 Opaque solve-report handle.
 */
typedef struct TgReport TgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *tg_version(void);

/*
 Builds the full sign-vector graph of dimension `n` (8 C(n,3) vertices).

 # Safety
 `out` must be a valid pointer to a `TgGraph*` slot.
 */
enum TgStatus tg_graph_gn(uint32_t n, struct TgGraph **out);

/*
 Builds the 0/1 restriction of dimension `n` (C(n,3) vertices).

 # Safety
 `out` must be a valid pointer to a `TgGraph*` slot.
 */
enum TgStatus tg_graph_nagy(uint32_t n, struct TgGraph **out);

/*
 Builds the canonical signplace configuration with `doubles` two-sign
 places and `singles` plus-only places.

 # Safety
 `out` must be a valid pointer to a `TgGraph*` slot.
 */
enum TgStatus tg_graph_config(uint32_t doubles, uint32_t singles, struct TgGraph **out);

/*
 Parses a DIMACS graph (`p edge` header, `e` lines, 1-based indices).

 # Safety
 `text` must be a valid NUL-terminated string; `out` a valid slot.
 */
enum TgStatus tg_graph_from_dimacs(const char *text, struct TgGraph **out);

/*
 Serializes the adjacency relation as DIMACS text. Returns null when `g`
 is null; release with `tg_string_free`.

 # Safety
 `g` must be null or a live graph handle.
 */
char *tg_graph_to_dimacs(const struct TgGraph *g);

/*
 Complement on the same vertex set.

 # Safety
 `g` must be a live graph handle; `out` a valid slot.
 */
enum TgStatus tg_graph_complement(const struct TgGraph *g, struct TgGraph **out);

/*
 Number of vertices, or -1 when `g` is null.

 # Safety
 `g` must be null or a live graph handle.
 */
int64_t tg_graph_order(const struct TgGraph *g);

/*
 Number of edges, or -1 when `g` is null.

 # Safety
 `g` must be null or a live graph handle.
 */
int64_t tg_graph_edge_count(const struct TgGraph *g);

/*
 Writes whether vertices `u` and `v` are adjacent into `out`.

 # Safety
 `g` must be a live graph handle; `out` a valid `bool` slot.
 */
enum TgStatus tg_graph_adjacent(const struct TgGraph *g, uint32_t u, uint32_t v, bool *out);

/*
 Releases a graph handle. Null is a no-op.

 # Safety
 `g` must be null or a pointer obtained from a `tg_graph_*` constructor,
 not yet freed.
 */
void tg_graph_free(struct TgGraph *g);

/*
 Exact maximum-independent-set solve.

 `time_limit_ms` and `node_limit` of 0 mean unlimited; `threads` of 0 uses
 the available parallelism. The report is exact unless the budget ran out,
 in which case it carries a lower/upper bound pair.

 # Safety
 `g` must be a live graph handle; `out` a valid slot.
 */
enum TgStatus tg_solve(const struct TgGraph *g,
                       uint64_t time_limit_ms,
                       uint64_t node_limit,
                       uint32_t threads,
                       struct TgReport **out);

/*
 Whether the report carries the exact independence number.

 # Safety
 `r` must be null or a live report handle.
 */
bool tg_report_is_exact(const struct TgReport *r);

/*
 Best proven lower bound (witness size); the exact value when exact.

 # Safety
 `r` must be null or a live report handle.
 */
uint64_t tg_report_lower(const struct TgReport *r);

/*
 Best proven upper bound; the exact value when exact.

 # Safety
 `r` must be null or a live report handle.
 */
uint64_t tg_report_upper(const struct TgReport *r);

/*
 Search-tree nodes visited.

 # Safety
 `r` must be null or a live report handle.
 */
uint64_t tg_report_nodes(const struct TgReport *r);

/*
 Wall-clock solve time in milliseconds.

 # Safety
 `r` must be null or a live report handle.
 */
uint64_t tg_report_elapsed_ms(const struct TgReport *r);

/*
 Size of the witness independent set.

 # Safety
 `r` must be null or a live report handle.
 */
uint64_t tg_report_witness_len(const struct TgReport *r);

/*
 Copies up to `capacity` witness vertex indices into `buf`; returns the
 number copied.

 # Safety
 `r` must be a live report handle; `buf` must point to at least
 `capacity` writable `uint32_t` slots.
 */
uint64_t tg_report_witness(const struct TgReport *r, uint32_t *buf, uint64_t capacity);

/*
 Releases a report handle. Null is a no-op.

 # Safety
 `r` must be null or a pointer obtained from `tg_solve`, not yet freed.
 */
void tg_report_free(struct TgReport *r);

/*
 Exhaustive oracle for graphs of at most 25 vertices; writes the exact
 independence number into `out`.

 # Safety
 `g` must be a live graph handle; `out` a valid slot.
 */
enum TgStatus tg_brute_force_mis(const struct TgGraph *g, uint64_t *out);

/*
 Writes into `out` whether the given vertex indices are pairwise
 non-adjacent. Out-of-range indices yield `VerifyFailed`.

 # Safety
 `g` must be a live graph handle; `members` must point to `len` readable
 `uint32_t` values; `out` must be a valid `bool` slot.
 */
enum TgStatus tg_verify_independent(const struct TgGraph *g,
                                    const uint32_t *members,
                                    uint64_t len,
                                    bool *out);

/*
 The closed-form independence number `max(6n - 28, 4n - 4 c(n))`.
 */
uint64_t tg_alpha_formula(uint64_t n);

/*
 The residue constant c(n) in {0, 1, 2}.
 */
uint32_t tg_c_const(uint64_t n);

/*
 Independence number `n - c(n)` of the 0/1 restriction.
 */
uint64_t tg_nagy_alpha(uint64_t n);

/*
 Chromatic lower bound for dimension `n >= 3`: writes the graph order,
 the independence number and `ceil(order / alpha)`.

 # Safety
 The out-pointers must each be null or valid slots.
 */
enum TgStatus tg_chi_lower_bound(uint64_t n,
                                 uint64_t *out_order,
                                 uint64_t *out_alpha,
                                 uint64_t *out_bound);

/*
 Generates a construction by kind name: "quad", "cobra", "double-cobra"
 or "nagy".

 # Safety
 `kind` must be a valid NUL-terminated string; `out` a valid slot.
 */
enum TgStatus tg_construction_new(const char *kind, uint32_t n, struct TgConstruction **out);

/*
 Parses the line-based construction text format.

 # Safety
 `text` must be a valid NUL-terminated string; `out` a valid slot.
 */
enum TgStatus tg_construction_from_text(const char *text, struct TgConstruction **out);

/*
 Number of vertices, or -1 when `c` is null.

 # Safety
 `c` must be null or a live construction handle.
 */
int64_t tg_construction_len(const struct TgConstruction *c);

/*
 Whether all pairwise scalar products avoid 1.

 # Safety
 `c` must be null or a live construction handle.
 */
bool tg_construction_is_independent(const struct TgConstruction *c);

/*
 Number of distinct signplaces intersected, or -1 when `c` is null.

 # Safety
 `c` must be null or a live construction handle.
 */
int64_t tg_construction_signplaces(const struct TgConstruction *c);

/*
 Copies the distinct pairwise scalar products (ascending) into `buf`, up
 to `capacity`; returns the number copied.

 # Safety
 `c` must be a live construction handle; `buf` must point to at least
 `capacity` writable `int32_t` slots.
 */
uint64_t tg_construction_spectrum(const struct TgConstruction *c, int32_t *buf, uint64_t capacity);

/*
 Serializes the construction in its line-based text format; release with
 `tg_string_free`. Returns null when `c` is null.

 # Safety
 `c` must be null or a live construction handle.
 */
char *tg_construction_to_text(const struct TgConstruction *c);

/*
 Builds the product-1 graph on the construction's vertices.

 # Safety
 `c` must be a live construction handle; `out` a valid slot.
 */
enum TgStatus tg_construction_to_graph(const struct TgConstruction *c, struct TgGraph **out);

/*
 Releases a construction handle. Null is a no-op.

 # Safety
 `c` must be null or a pointer obtained from a construction constructor,
 not yet freed.
 */
void tg_construction_free(struct TgConstruction *c);

/*
 Releases a string returned by this library. Null is a no-op.

 # Safety
 `s` must be null or a pointer returned by a `tg_*` function that
 documents `tg_string_free`, not yet freed.
 */
void tg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIGRAPH_H */
