#ifndef GREENRING_H
#define GREENRING_H

/* C interface to the greenring library.
 *
 * Every call that can fail returns a gr_status; on failure the message is
 * available from gr_last_error() on the same thread. Strings returned through
 * char** outputs are owned by the caller and released with gr_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#  ifdef GREENRING_BUILDING
#    define GR_API __declspec(dllexport)
#  else
#    define GR_API __declspec(dllimport)
#  endif
#else
#  define GR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gr_ring gr_ring;
typedef struct gr_element gr_element;
typedef struct gr_based gr_based;

typedef enum {
  GR_OK = 0,
  GR_ERR_DOMAIN,
  GR_ERR_CONTEXT,
  GR_ERR_PARSE,
  GR_ERR_INTEGRALITY,
  GR_ERR_PRECONDITION,
  GR_ERR_NUMERIC,
  GR_ERR_PRESENTATION,
  GR_ERR_FORMAT,
  GR_ERR_UNSUPPORTED,
  GR_ERR_ARGUMENT,
  GR_ERR_INTERNAL
} gr_status;

typedef enum { GR_RADFORD = 0, GR_GROTHENDIECK, GR_STABLE, GR_TAFT } gr_kind;
typedef enum { GR_JSON = 0, GR_CSV, GR_TEXT } gr_format;
typedef enum { GR_CHECK_FUSION = 0, GR_CHECK_GROUPLIKE, GR_CHECK_BIFROBENIUS } gr_check;
typedef enum { GR_PROJECT_STABLE = 0, GR_PROJECT_GROTHENDIECK } gr_projection;
typedef enum { GR_BASIS_F = 0, GR_BASIS_MONOMIAL } gr_basis;

GR_API const char* gr_last_error(void);
GR_API void gr_string_free(char* s);
/* 0 restores the default (GREENRING_THREADS, then hardware concurrency). */
GR_API void gr_set_threads(unsigned count);

/* m is ignored for stable rings and must be 1 for GR_TAFT. */
GR_API gr_status gr_ring_create(gr_kind kind, int n, int m, gr_ring** out);
GR_API void gr_ring_free(gr_ring* ring);
GR_API size_t gr_ring_rank(const gr_ring* ring);
GR_API gr_status gr_ring_describe(const gr_ring* ring, char** out);

GR_API gr_status gr_element_parse(const gr_ring* ring, const char* src, gr_element** out);
GR_API gr_status gr_element_mul(const gr_element* a, const gr_element* b, gr_element** out);
GR_API gr_status gr_element_render(const gr_element* e, char** out);
/* Stable rings only: F-basis or monomial-basis rendering. */
GR_API gr_status gr_element_convert(const gr_element* e, gr_basis basis, char** out);
/* Source must be a Radford Green ring (or Taft). */
GR_API gr_status gr_element_project(const gr_element* e, gr_projection target, gr_element** out);
GR_API void gr_element_free(gr_element* e);

GR_API gr_status gr_based_from_ring(const gr_ring* ring, gr_based** out);
GR_API gr_status gr_based_load_json(const char* text, gr_based** out);
GR_API void gr_based_free(gr_based* b);
GR_API size_t gr_based_rank(const gr_based* b);
GR_API gr_status gr_based_render(const gr_based* b, gr_format format, char** out);
GR_API gr_status gr_based_gram(const gr_based* b, gr_format format, char** out);
GR_API gr_status gr_based_radical(const gr_based* b, gr_format format, char** out);
GR_API gr_status gr_based_fpdim(const gr_based* b, double tol, gr_format format, char** out);
/* *passed receives 1 or 0. A failing check is not an error: the call returns
 * GR_OK and the report lists the violations. */
GR_API gr_status gr_based_verify(const gr_based* b, gr_check check, double tol, gr_format format, int* passed,
                                 char** out);

#ifdef __cplusplus
}
#endif

#endif
