#ifndef AMPHICHIRAL_H
#define AMPHICHIRAL_H

/* C interface to the amphicheirality library.
 *
 * All objects are opaque handles created by *_new / *_from_* / compute
 * functions and released by the matching *_free. Functions that can fail
 * return an amphi_status; on failure amphi_last_error() describes the
 * problem (per thread, valid until the next failing call on that thread).
 * Strings returned through char** are heap allocated and must be released
 * with amphi_string_free. Diagram numbers are 1-based, as in reports. */

#include <stddef.h>

#if defined(_WIN32)
#define AMPHI_API __declspec(dllexport)
#else
#define AMPHI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum amphi_status {
  AMPHI_OK = 0,
  AMPHI_INVALID_ARGUMENT = 1,
  AMPHI_PARSE = 2,
  AMPHI_BUILD = 3,
  AMPHI_PRECONDITION = 4,
  AMPHI_ORBIT_OVERFLOW = 5,
  AMPHI_CAP_EXCEEDED = 6,
  AMPHI_IO = 7,
  AMPHI_INTERNAL = 8
} amphi_status;

typedef struct amphi_config amphi_config;
typedef struct amphi_diagram amphi_diagram;
typedef struct amphi_verdict amphi_verdict;
typedef struct amphi_orbit amphi_orbit;
typedef struct amphi_graph_set amphi_graph_set;

AMPHI_API const char* amphi_version(void);
AMPHI_API const char* amphi_status_name(amphi_status status);
/* Message for the last failing call on this thread; empty after a success. */
AMPHI_API const char* amphi_last_error(void);
AMPHI_API void amphi_string_free(char* s);

/* Configuration. New configs hold the bundled defaults. */
AMPHI_API amphi_status amphi_config_new(amphi_config** out);
AMPHI_API amphi_status amphi_config_apply_json(amphi_config* cfg, const char* json);
AMPHI_API amphi_status amphi_config_set_iso_mode(amphi_config* cfg, const char* mode);
AMPHI_API amphi_status amphi_config_set_reflection(amphi_config* cfg, int allow);
AMPHI_API amphi_status amphi_config_set_max_orbit(amphi_config* cfg, int max_orbit);
AMPHI_API amphi_status amphi_config_set_threads(amphi_config* cfg, int threads);
AMPHI_API amphi_status amphi_config_set_format(amphi_config* cfg, const char* format);
AMPHI_API amphi_status amphi_config_set_oracle_checks(amphi_config* cfg, int enabled);
AMPHI_API amphi_status amphi_config_to_json(const amphi_config* cfg, char** out);
AMPHI_API void amphi_config_free(amphi_config* cfg);

/* Diagrams. PD input accepts "PD[X[...],...]" text, the JSON document
 * written by amphi_diagram_pd_json, or a bare JSON array of 4-tuples. */
AMPHI_API amphi_status amphi_diagram_from_conway(const char* conway, amphi_diagram** out);
AMPHI_API amphi_status amphi_diagram_from_pd(const char* pd, amphi_diagram** out);
AMPHI_API amphi_status amphi_diagram_mirror(const amphi_diagram* d, amphi_diagram** out);
AMPHI_API int amphi_diagram_crossings(const amphi_diagram* d);
AMPHI_API int amphi_diagram_components(const amphi_diagram* d);
AMPHI_API int amphi_diagram_is_alternating(const amphi_diagram* d);
AMPHI_API amphi_status amphi_diagram_pd_json(const amphi_diagram* d, char** out);
AMPHI_API amphi_status amphi_diagram_pd_text(const amphi_diagram* d, char** out);
/* 1 when the two diagrams are isomorphic on the sphere (orientation kept). */
AMPHI_API amphi_status amphi_diagram_equivalent(const amphi_diagram* a, const amphi_diagram* b, int* out);
AMPHI_API void amphi_diagram_free(amphi_diagram* d);

/* Classification. cfg may be NULL for the defaults. */
AMPHI_API amphi_status amphi_classify(const amphi_diagram* d, const amphi_config* cfg, amphi_verdict** out);
AMPHI_API int amphi_verdict_amphicheiral(const amphi_verdict* v);
AMPHI_API int amphi_verdict_dh_link(const amphi_verdict* v);
AMPHI_API int amphi_verdict_orbit_size(const amphi_verdict* v);
AMPHI_API int amphi_verdict_labeled_orbit_size(const amphi_verdict* v);
AMPHI_API size_t amphi_verdict_self_dual_count(const amphi_verdict* v);
AMPHI_API int amphi_verdict_self_dual(const amphi_verdict* v, size_t index);
AMPHI_API size_t amphi_verdict_pair_count(const amphi_verdict* v);
AMPHI_API amphi_status amphi_verdict_pair(const amphi_verdict* v, size_t index, int* i, int* j);
AMPHI_API amphi_status amphi_verdict_json(const amphi_verdict* v, char** out);
AMPHI_API void amphi_verdict_free(amphi_verdict* v);

/* Flype orbit. Diagrams are indexed 1..size. */
AMPHI_API amphi_status amphi_orbit_compute(const amphi_diagram* d, const amphi_config* cfg, amphi_orbit** out);
AMPHI_API int amphi_orbit_size(const amphi_orbit* o);
AMPHI_API int amphi_orbit_labeled_size(const amphi_orbit* o);
AMPHI_API amphi_status amphi_orbit_diagram(const amphi_orbit* o, int index, amphi_diagram** out);
/* Diagram number of d in the orbit, or 0 when d is not a member. */
AMPHI_API amphi_status amphi_orbit_find(const amphi_orbit* o, const amphi_diagram* d, int* index);
AMPHI_API void amphi_orbit_free(amphi_orbit* o);

/* Checkerboard graph files; which is "G", "Gdual", "both" or "all-orbit".
 * The config format picks DOT or JSON. */
AMPHI_API amphi_status amphi_graphs(const char* conway, const char* which, const amphi_config* cfg,
                                    amphi_graph_set** out);
AMPHI_API amphi_status amphi_graphs_of_diagram(const amphi_diagram* d, const char* which, const amphi_config* cfg,
                                               amphi_graph_set** out);
AMPHI_API size_t amphi_graph_set_size(const amphi_graph_set* g);
AMPHI_API const char* amphi_graph_set_name(const amphi_graph_set* g, size_t index);
AMPHI_API const char* amphi_graph_set_text(const amphi_graph_set* g, size_t index);
AMPHI_API void amphi_graph_set_free(amphi_graph_set* g);

/* Reports, formatted according to the config. */
AMPHI_API amphi_status amphi_report_classify(const char* conway, const amphi_config* cfg, char** out);
/* Same report for a diagram given directly; label fills the input field. */
AMPHI_API amphi_status amphi_report_classify_diagram(const amphi_diagram* d, const char* label,
                                                     const amphi_config* cfg, char** out);
/* names_json: JSON array of Conway symbols to locate in the orbit, or NULL. */
AMPHI_API amphi_status amphi_report_orbit(const char* conway, const char* names_json, const amphi_config* cfg,
                                          char** out);
/* symbols_json: JSON array of Conway symbols. */
AMPHI_API amphi_status amphi_report_scan(const char* symbols_json, int crossing_cap, const amphi_config* cfg,
                                         char** out);
AMPHI_API amphi_status amphi_verify_paper(const amphi_config* cfg, int* passed, char** report);

/* Family symbols as JSON arrays of strings. */
AMPHI_API amphi_status amphi_family_symbols(const char* pretzel, int k_min, int k_max, char** out);
AMPHI_API amphi_status amphi_enumerate_family_symbols(int n_min, int n_max, int max_entry, int max_length, int k,
                                                      int crossing_cap, int integer_only, char** out);

/* Kauffman bracket by state sum (at most 24 crossings). Polynomials come
 * back as text, e.g. "-1*A^-5 - 1*A^3 + 1*A^7". */
AMPHI_API amphi_status amphi_bracket(const amphi_diagram* d, int threads, char** out);
AMPHI_API amphi_status amphi_normalized_bracket(const amphi_diagram* d, int threads, char** out);
AMPHI_API amphi_status amphi_writhe(const amphi_diagram* d, int* out);
AMPHI_API amphi_status amphi_mirror_symmetric(const amphi_diagram* d, int threads, int* out);

#ifdef __cplusplus
}
#endif

#endif
