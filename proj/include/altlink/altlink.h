/* C interface to the altlink library: opaque handles, integer status codes. */
#ifndef ALTLINK_ALTLINK_H
#define ALTLINK_ALTLINK_H

#include <stddef.h>

#if defined(_WIN32)
#define ALTLINK_API __declspec(dllexport)
#else
#define ALTLINK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct altlink_diagram altlink_diagram;
typedef struct altlink_trace altlink_trace;
typedef struct altlink_catalog altlink_catalog;

/* 0 on success, otherwise the library error code (see altlink_status_name). */
typedef int altlink_status;
#define ALTLINK_OK 0
#define ALTLINK_INTERNAL_ERROR 99

/* Message of the most recent failure on this thread. */
ALTLINK_API const char* altlink_last_error(void);
ALTLINK_API const char* altlink_status_name(altlink_status status);
/* Frees any string returned through a char** out parameter. */
ALTLINK_API void altlink_string_free(char* s);

/* Diagrams */
ALTLINK_API altlink_status altlink_diagram_parse(const char* text, altlink_diagram** out);
ALTLINK_API altlink_status altlink_diagram_load(const char* path, altlink_diagram** out);
ALTLINK_API altlink_status altlink_diagram_torus(int n, altlink_diagram** out);
ALTLINK_API void altlink_diagram_free(altlink_diagram* d);
ALTLINK_API int altlink_diagram_vertices(const altlink_diagram* d);
ALTLINK_API altlink_status altlink_diagram_render(const altlink_diagram* d, char** out);
ALTLINK_API altlink_status altlink_diagram_save(const altlink_diagram* d, const char* path);
ALTLINK_API altlink_status altlink_diagram_dot(const altlink_diagram* d, char** out);
ALTLINK_API altlink_status altlink_diagram_export_dot(const altlink_diagram* d, const char* path);
/* Canonical code text; fold != 0 identifies mirror images. */
ALTLINK_API altlink_status altlink_diagram_canon(const altlink_diagram* d, int fold, char** out);

/* Analyses; each fills a human-readable report. */
ALTLINK_API altlink_status altlink_validate(const altlink_diagram* d, int* ok, char** report);
ALTLINK_API altlink_status altlink_components(const altlink_diagram* d, int* count, char** report);
ALTLINK_API altlink_status altlink_groups(const altlink_diagram* d, char** report);
/* Condenses to a diagram without 2-groups; out may be NULL. */
ALTLINK_API altlink_status altlink_condense(const altlink_diagram* d, altlink_diagram** out, char** report);

/* Moves; crossings name a (sub)group chain or an ots-triangle. */
ALTLINK_API altlink_status altlink_apply_t(const altlink_diagram* d, const int* crossings, size_t count,
                                           altlink_diagram** out);
ALTLINK_API altlink_status altlink_apply_ots(const altlink_diagram* d, const int* triangle, altlink_diagram** out);

/* Reduction to the torus shadow and trace checking. */
ALTLINK_API altlink_status altlink_reduce(const altlink_diagram* d, int depth_cap, altlink_trace** out);
ALTLINK_API altlink_status altlink_trace_parse(const char* jsonl, altlink_trace** out);
ALTLINK_API altlink_status altlink_trace_load(const char* path, altlink_trace** out);
ALTLINK_API altlink_status altlink_trace_jsonl(const altlink_trace* t, char** out);
ALTLINK_API altlink_status altlink_trace_summary(const altlink_trace* t, char** out);
ALTLINK_API void altlink_trace_free(altlink_trace* t);
ALTLINK_API altlink_status altlink_verify(const altlink_diagram* d, const altlink_trace* t, int* ok, char** report);

/* Orbit catalogs; depth_limit < 0 means unbounded. */
ALTLINK_API altlink_status altlink_orbit(int n, int depth_limit, int fold, altlink_catalog** out);
ALTLINK_API void altlink_catalog_free(altlink_catalog* c);
ALTLINK_API size_t altlink_catalog_size(const altlink_catalog* c);
ALTLINK_API int altlink_catalog_partial(const altlink_catalog* c);
ALTLINK_API altlink_status altlink_catalog_codes(const altlink_catalog* c, char** out);
ALTLINK_API altlink_status altlink_catalog_witnesses(const altlink_catalog* c, char** out);
/* Compares against independently generated shadows of the same size. */
ALTLINK_API altlink_status altlink_catalog_check_brute_force(const altlink_catalog* c, int* equal, char** report);

#ifdef __cplusplus
}
#endif

#endif
