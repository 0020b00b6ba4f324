#ifndef FRIEZEKIT_H
#define FRIEZEKIT_H

#include <stddef.h>

#if defined(FK_BUILDING)
#define FK_API __attribute__((visibility("default")))
#else
#define FK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fk_status {
  FK_OK = 0,
  FK_ERR_INPUT = 2,
  FK_ERR_UNSUPPORTED = 3,
  FK_ERR_VERIFICATION = 4,
  FK_ERR_INTERNAL = 5,
  FK_ERR_NULL = 6
} fk_status;

typedef struct fk_poly fk_poly;
typedef struct fk_triangulation fk_triangulation;

/* Message of the last failed call on this thread; empty after success. */
FK_API const char* fk_last_error(void);
FK_API const char* fk_version(void);
/* Every char* returned through an out parameter is released with this. */
FK_API void fk_string_free(char* s);

/* Laurent polynomials. */
FK_API fk_status fk_poly_parse(const char* text, fk_poly** out);
FK_API fk_status fk_poly_from_json(const char* json, fk_poly** out);
FK_API void fk_poly_free(fk_poly* p);
FK_API fk_status fk_poly_clone(const fk_poly* p, fk_poly** out);
FK_API fk_status fk_poly_to_text(const fk_poly* p, char** out);
FK_API fk_status fk_poly_to_json(const fk_poly* p, char** out);
FK_API fk_status fk_poly_add(const fk_poly* a, const fk_poly* b, fk_poly** out);
FK_API fk_status fk_poly_sub(const fk_poly* a, const fk_poly* b, fk_poly** out);
FK_API fk_status fk_poly_mul(const fk_poly* a, const fk_poly* b, fk_poly** out);
FK_API fk_status fk_poly_equal(const fk_poly* a, const fk_poly* b, int* out);
/* First term where a and b differ; empty when equal. */
FK_API fk_status fk_poly_first_difference(const fk_poly* a, const fk_poly* b, char** out);
/* Value with every variable set to 1, in decimal. */
FK_API fk_status fk_poly_evaluate_ones(const fk_poly* p, char** out);
FK_API fk_status fk_poly_chebyshev(unsigned k, const fk_poly* p, fk_poly** out);
FK_API fk_status fk_poly_term_count(const fk_poly* p, size_t* out);

/* Triangulations. */
FK_API fk_status fk_triangulation_load_file(const char* path, fk_triangulation** out);
FK_API fk_status fk_triangulation_load_json(const char* json, fk_triangulation** out);
FK_API void fk_triangulation_free(fk_triangulation* t);
FK_API fk_status fk_triangulation_to_json(const fk_triangulation* t, char** out);
FK_API fk_status fk_triangulation_n(const fk_triangulation* t, long* out);
/* JSON array of quiddity entries. */
FK_API fk_status fk_triangulation_quiddity(const fk_triangulation* t, char** out);
/* JSON array of rows, indexed by arc labels in file order. */
FK_API fk_status fk_triangulation_signed_adjacency(const fk_triangulation* t, char** out);
FK_API fk_status fk_triangulation_flip(const fk_triangulation* t, const char* label, fk_triangulation** out);

/* Expansions. engine: "matching", "tpath" or "both"; "band", "chebyshev" or "both" for bracelets. */
FK_API fk_status fk_expand_arc(const fk_triangulation* t, long i, long j, int level, const char* engine,
                               int keep_boundary, fk_poly** out);
FK_API fk_status fk_expand_lift(const fk_triangulation* t, long s, long u, const char* engine, int keep_boundary,
                                fk_poly** out);
FK_API fk_status fk_expand_bracelet(const fk_triangulation* t, int k, const char* engine, int keep_boundary,
                                    fk_poly** out);
/* Snake graph of an arc and band graph of a bracelet, as JSON. */
FK_API fk_status fk_snake_graph_json(const fk_triangulation* t, long i, long j, int level, char** out);
FK_API fk_status fk_band_graph_json(const fk_triangulation* t, int k, char** out);
FK_API fk_status fk_matching_count(const fk_triangulation* t, long i, long j, int level, size_t* out);

/* Friezes. format: "tsv", "json" or "latex". boundary: "outer" or "inner". */
FK_API fk_status fk_frieze_integer(const long* q, size_t n, int rows, const char* format, char** out);
FK_API fk_status fk_frieze_laurent(const fk_triangulation* t, const char* boundary, int rows, int cols,
                                   int keep_boundary, const char* format, char** out);
FK_API fk_status fk_growth_integer(const long* q, size_t n, int K, char** out);

/* Verification suites: diamond, progression, growth, complement-diff, arithmetic, bijection.
   params is a JSON object with optional keys from, to, level, m, rows, cols, seed.
   The report is JSON with an "ok" member; *passed mirrors it. */
FK_API fk_status fk_verify(const fk_triangulation* t, const char* suite, const char* params, char** report,
                           int* passed);

/* Lattice of BCI tuples as "dot" or "json", the poset as DOT, and the polygon cover as JSON. */
FK_API fk_status fk_lattice(const fk_triangulation* t, long i, long j, int level, const char* format, char** out);
FK_API fk_status fk_poset_dot(const fk_triangulation* t, long i, long j, int level, char** out);
FK_API fk_status fk_cover_json(const fk_triangulation* t, long i, long j, int level, char** out);

#ifdef __cplusplus
}
#endif

#endif
