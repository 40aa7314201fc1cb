#ifndef SURFCALC_H
#define SURFCALC_H

/* C interface to the surface-calculus library. All functions return a
 * status code; on failure sc_last_error() describes the problem. Output
 * strings are heap-allocated JSON (or DOT) and must be released with
 * sc_string_free(). The sc_surface handle is opaque and immutable. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_PARSE = 1,      /* malformed JSON, end expression or word */
  SC_ERR_VALIDATION = 2, /* input violates a structural invariant */
  SC_ERR_FRAGMENT = 3,   /* end space leaves the decidable fragment */
  SC_ERR_DOMAIN = 4,     /* operation precondition not met */
  SC_ERR_INTERNAL = 5
} sc_status;

typedef struct sc_surface sc_surface;

/* Message for the most recent failure on this thread. */
const char* sc_last_error(void);
void sc_string_free(char* s);

/* Surface handles from the JSON schema
 * {"genus":"inf"|int,"orient":"or"|"even"|"odd"|"infnonor",
 *  "boundary":int,"ends":"<end expression>"}. */
sc_status sc_surface_parse(const char* json, sc_surface** out);
void sc_surface_free(sc_surface* s);
sc_status sc_surface_validate(const sc_surface* s, char** violations_json);

/* Homeomorphy verdict for two surface specs. */
sc_status sc_classify(const sc_surface* a, const sc_surface* b, int max_seq_depth,
                      char** report_json);

/* Canonical form of an end expression. */
sc_status sc_ends_normalize(const char* expr, int max_seq_depth, char** report_json);

/* Principal exhaustion of the given depth, with its validation report. */
sc_status sc_exhaust(const sc_surface* s, int depth, char** report_json);

/* Curve system for the Alexander method over a built exhaustion. */
sc_status sc_alexander(const sc_surface* s, int depth, char** report_json);

/* Enumerates pants decompositions of a finite-type surface
 * ({"orientable":bool,"genus":int,"punctures":int,"boundary":int}) and runs
 * the cut-vertex comparison on each. */
sc_status sc_pants_check(const char* finite_json, long max_count, char** report_json);

/* Separating-curve basis of the surface with planar ends forgotten. */
sc_status sc_basis(const sc_surface* s, int depth, char** report_json);

/* Ends graph and its shift spanning tree; which is "eg", "teg" or "nteg";
 * as_dot selects DOT over JSON. */
sc_status sc_shift_graph(const sc_surface* s, int depth, const char* which, int as_dot,
                         char** out);

/* Rank of the separating first homology of the planar-forgotten surface. */
sc_status sc_rank(const sc_surface* s, int depth, char** report_json);

/* Evaluates a word over compact and shift letters: normal form, coordinate
 * vector, kernel membership test. substitute_json is optional
 * ({"index":int,"curves":[...],"separates":[int,...]}) and replaces that
 * shift by a compact letter supported on the window. */
sc_status sc_word_eval(const char* word, int rank, const char* substitute_json,
                       char** report_json);

/* Strip-model check of the handle/crosscap shift relation on a window. */
sc_status sc_relation_check(int window, char** report_json);

sc_status sc_cohomology(const sc_surface* s, int depth, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SURFCALC_H */
