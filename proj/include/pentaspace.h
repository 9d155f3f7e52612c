/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/*
 * C interface to the pentaspace shared library.
 *
 * Conventions:
 *   - Every fallible call returns a penta_status; PENTA_OK means success.
 *   - On failure, penta_last_error() returns a thread-local message that
 *     stays valid until the next failing call on the same thread.
 *   - Objects returned through **out parameters are owned by the caller and
 *     released with the matching *_free function.
 *   - char** outputs are malloc'd NUL-terminated strings; release them with
 *     penta_string_free. Exact rationals are rendered as "p/q" or "n".
 *   - const char* getters on a report borrow from the report and stay valid
 *     until penta_report_free.
 */
#ifndef PENTASPACE_H
#define PENTASPACE_H

#include <stddef.h>

#if defined(__GNUC__) || defined(__clang__)
#define PENTA_API __attribute__((visibility("default")))
#else
#define PENTA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum penta_status {
  PENTA_OK = 0,
  PENTA_PARSE_ERROR,
  PENTA_ZERO_DENOMINATOR,
  PENTA_INVALID_ARGUMENT,
  PENTA_SINGULAR_MATRIX,
  PENTA_EMPTY_OR_UNBOUNDED,
  PENTA_NON_LATTICE_POLYGON,
  PENTA_NOT_NEARLY_REGULAR,
  PENTA_NOT_TORIC_GENERIC,
  PENTA_SHAPE_ASSERTION,
  PENTA_DEGENERATE_SAMPLES,
  PENTA_INCONSISTENT_SAMPLES,
  PENTA_BOUNDS_TOO_SMALL,
  PENTA_VERIFICATION_FAILED,
  PENTA_OVERFLOW,
  PENTA_INTERNAL_ERROR
} penta_status;

PENTA_API const char* penta_status_name(penta_status status);
PENTA_API const char* penta_last_error(void);
PENTA_API const char* penta_version(void);
PENTA_API void penta_string_free(char* text);

/* Five positive edge lengths. */
typedef struct penta_edges penta_edges;

PENTA_API penta_status penta_edges_create(const char* const texts[5],
                                          penta_edges** out);
PENTA_API void penta_edges_free(penta_edges* edges);

PENTA_API penta_status penta_edges_classify(const penta_edges* edges, int* smooth,
                                            int* nearly_regular, int* toric_generic);
PENTA_API penta_status penta_edges_riemann_roch(const penta_edges* edges,
                                                char** out_value);
PENTA_API penta_status penta_edges_symplectic_volume(const penta_edges* edges,
                                                     char** out_value);
PENTA_API penta_status penta_edges_euler_characteristic(const penta_edges* edges,
                                                        int* out_value);
PENTA_API penta_status penta_edges_betti_numbers(const penta_edges* edges,
                                                 int out_values[3]);

/* Moment polytope of the two diagonal lengths. */
typedef struct penta_polytope penta_polytope;

PENTA_API penta_status penta_edges_moment_polytope(const penta_edges* edges,
                                                   penta_polytope** out);
PENTA_API void penta_polytope_free(penta_polytope* polytope);

PENTA_API penta_status penta_polytope_vertex_count(const penta_polytope* polytope,
                                                   size_t* out_count);
PENTA_API penta_status penta_polytope_vertex(const penta_polytope* polytope,
                                             size_t index, char** out_x, char** out_y);
PENTA_API penta_status penta_polytope_area(const penta_polytope* polytope,
                                           char** out_value);
PENTA_API penta_status penta_polytope_boundary_points(const penta_polytope* polytope,
                                                      long long* out_count);
PENTA_API penta_status penta_polytope_lattice_points(const penta_polytope* polytope,
                                                     long long* out_count);
PENTA_API penta_status penta_polytope_pick_count(const penta_polytope* polytope,
                                                 long long* out_count);
PENTA_API penta_status penta_polytope_svg(const penta_polytope* polytope,
                                          char** out_svg);

/*
 * Structured command reports: a JSON document, a one-line summary, an
 * optional SVG rendering, and the suggested process exit status
 * (0 pass, 1 input error, 2 verification failure).
 */
typedef struct penta_report penta_report;

PENTA_API penta_status penta_report_classify(const char* const edges[5],
                                             penta_report** out);
PENTA_API penta_status penta_report_polytope(const char* const edges[5],
                                             const char* svg_path, penta_report** out);
PENTA_API penta_status penta_report_invariants(const char* const edges[5],
                                               penta_report** out);
PENTA_API penta_status penta_report_dh(long long target, long long min_critical,
                                       penta_report** out);
PENTA_API penta_status penta_report_verify(unsigned long long seed, size_t samples,
                                           penta_report** out);

PENTA_API const char* penta_report_json(const penta_report* report);
PENTA_API const char* penta_report_summary(const penta_report* report);
PENTA_API const char* penta_report_svg(const penta_report* report); /* NULL if none */
PENTA_API int penta_report_exit_status(const penta_report* report);
PENTA_API void penta_report_free(penta_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PENTASPACE_H */
