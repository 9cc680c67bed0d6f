/* C interface to the dwindex library. Every call returns a dw_status; on
 * failure dw_last_error_message() describes the most recent error on the
 * calling thread. Strings handed out by the library are released with
 * dw_string_free, handles with their matching *_free function. */
#ifndef DWINDEX_DWINDEX_H
#define DWINDEX_DWINDEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DWINDEX_BUILDING)
#    define DWINDEX_API __declspec(dllexport)
#  else
#    define DWINDEX_API __declspec(dllimport)
#  endif
#else
#  define DWINDEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dw_status {
    DW_OK = 0,
    DW_ERR_NON_SYMMETRIC = 1,
    DW_ERR_DEGENERATE = 2,
    DW_ERR_NOT_EXTREME = 3,
    DW_ERR_DIMENSION_MISMATCH = 4,
    DW_ERR_NOT_UNIT_NORM = 5,
    DW_ERR_BAD_PARAMETER = 6,
    DW_ERR_LP_FAILURE = 7,
    DW_ERR_PARSE = 8,
    DW_ERR_IO = 9,
    DW_ERR_NULL_ARGUMENT = 10,
    DW_ERR_INTERNAL = 11
} dw_status;

typedef enum dw_radius_kind {
    DW_KIND_OPNORM = 0,
    DW_KIND_W = 1,
    DW_KIND_DW = 2,
    DW_KIND_DWSTAR = 3
} dw_radius_kind;

typedef struct dw_space dw_space;
typedef struct dw_operator dw_operator;
typedef struct dw_complex_operator dw_complex_operator;
typedef struct dw_shell dw_shell;

DWINDEX_API const char* dw_status_string(dw_status status);
DWINDEX_API const char* dw_last_error_message(void);
DWINDEX_API void dw_string_free(char* s);

/* Parses "opnorm", "w", "dw" or "dwstar". */
DWINDEX_API dw_status dw_radius_kind_parse(const char* name, dw_radius_kind* out);

/* Spaces. `coords` holds `count` vertices of dimension `dim`, row-major. */
DWINDEX_API dw_status dw_space_build(const double* coords, size_t count, size_t dim, double tol, dw_space** out);
DWINDEX_API dw_status dw_space_from_json(const char* json, dw_space** out);
DWINDEX_API dw_status dw_space_to_json(const dw_space* space, char** out);
/* kind: "regular-polygon", "prism", "pyramid-prism", "drum", "hexagon-gamma",
 * "octagon-xi". A prism is built over `base_kind` (NULL means regular-polygon)
 * with half-height `height`; for "pyramid-prism" `height` is the apex height
 * and a value <= 0 selects the standard apex at 2. */
DWINDEX_API dw_status dw_space_gallery(const char* kind, int n, double gamma, double xi, double height,
                                       const char* base_kind, dw_space** out);
DWINDEX_API void dw_space_free(dw_space* space);
DWINDEX_API size_t dw_space_dim(const dw_space* space);
DWINDEX_API size_t dw_space_vertex_count(const dw_space* space);
DWINDEX_API size_t dw_space_facet_count(const dw_space* space);
DWINDEX_API dw_status dw_space_norm(const dw_space* space, const double* x, size_t dim, double* out);

/* Real operators, row-major `dim` x `dim`. */
DWINDEX_API dw_status dw_operator_create(const double* entries, size_t dim, dw_operator** out);
DWINDEX_API dw_status dw_operator_from_json(const char* json, dw_operator** out);
DWINDEX_API void dw_operator_free(dw_operator* op);

DWINDEX_API dw_status dw_radius_value(const dw_space* space, const dw_operator* op, dw_radius_kind kind,
                                      double* out);
/* Radius report as JSON; when oracle_samples > 0 a seeded sampled estimate
 * is attached as "oracle" (not available for opnorm). */
DWINDEX_API dw_status dw_radius_json(const dw_space* space, const dw_operator* op, dw_radius_kind kind,
                                     size_t oracle_samples, uint64_t seed, char** out);
DWINDEX_API dw_status dw_sampled_radius(const dw_space* space, const dw_operator* op, dw_radius_kind kind,
                                        size_t samples, uint64_t seed, double* out);

/* Index search; restarts <= 0 selects the dimension-based default. */
DWINDEX_API dw_status dw_index_estimate_json(const dw_space* space, dw_radius_kind kind, int restarts, uint64_t seed,
                                             double tol, char** out);
/* Vertex certificates and their lower bound; vertex < 0 certifies every
 * representative vertex. */
DWINDEX_API dw_status dw_certify_json(const dw_space* space, long vertex, char** out);
DWINDEX_API dw_status dw_index_lower_bound(const dw_space* space, double* out);

/* Full reproduction table; *all_pass receives 1 when every row passes. */
DWINDEX_API dw_status dw_reproduce_json(uint64_t seed, double pyramid_apex_height, char** out, int* all_pass);

/* Complex operators for the l_p shell sampler. */
DWINDEX_API dw_status dw_complex_operator_from_json(const char* json, dw_complex_operator** out);
DWINDEX_API dw_status dw_complex_operator_nonconvex(int dim, dw_complex_operator** out);
DWINDEX_API size_t dw_complex_operator_dim(const dw_complex_operator* op);
DWINDEX_API void dw_complex_operator_free(dw_complex_operator* op);

DWINDEX_API dw_status dw_shell_sample(const dw_complex_operator* op, double p, size_t samples, uint64_t seed,
                                      dw_shell** out);
DWINDEX_API void dw_shell_free(dw_shell* shell);
DWINDEX_API size_t dw_shell_size(const dw_shell* shell);
/* Copies up to `capacity` points as (w_re, w_im, s) triples; returns count. */
DWINDEX_API size_t dw_shell_points(const dw_shell* shell, double* xyz, size_t capacity);
DWINDEX_API dw_status dw_shell_write_csv(const dw_shell* shell, const char* path);
DWINDEX_API dw_status dw_shell_median_spacing(const dw_shell* shell, double* out);
/* Convexity witness search at gap threshold `tol` (<= 0 picks 10x the median
 * nearest-neighbour spacing); JSON includes the threshold used. */
DWINDEX_API dw_status dw_shell_witness_json(const dw_shell* shell, double tol, char** out);
/* Summary: p, count, seed, dw estimate, median spacing. */
DWINDEX_API dw_status dw_shell_summary_json(const dw_shell* shell, char** out);

#ifdef __cplusplus
}
#endif

#endif
