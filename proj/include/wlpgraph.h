#ifndef WLPGRAPH_H
#define WLPGRAPH_H

/* C interface to the independence-polynomial / weak-Lefschetz library.
 *
 * Every function that can fail returns a wlpg_status; on any nonzero
 * status a thread-local message is available from wlpg_last_error().
 * Strings handed out through char** parameters are heap copies owned by
 * the caller and released with wlpg_string_free(); graphs are released
 * with wlpg_graph_free(). Structured results are JSON or CSV text, so the
 * interface stays stable while the underlying types evolve.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wlpg_status {
    WLPG_OK = 0,
    WLPG_ERR_INVALID = 1,       /* malformed input or bad arguments */
    WLPG_ERR_INDETERMINATE = 2, /* a rank could not be certified under the
                                   configured policy */
    WLPG_ERR_INTERNAL = 3
} wlpg_status;

/* Opaque simple graph handle. */
typedef struct wlpg_graph wlpg_graph;

/* Knobs shared by every checking entry point. Zero-initialize and call
 * wlpg_options_init() to obtain the defaults, then override fields. A NULL
 * options pointer everywhere means "all defaults". */
typedef struct wlpg_options {
    uint64_t seed;              /* base seed for the certified-rank primes */
    int extra_primes;           /* stability confirmations for deficiencies */
    int dense_threshold;        /* max min-dimension for exact elimination */
    int max_retries;            /* fresh-prime attempts before falling back */
    double time_budget_seconds; /* 0 = unlimited */
    int fail_fast;              /* nonzero: stop a check at the first
                                   non-maximal degree */
    int parallelism;            /* worker threads across independent degrees
                                   or sweep parameters (1 = sequential) */
} wlpg_options;

void wlpg_options_init(wlpg_options* opts);

/* Library version, a static string; do not free. */
const char* wlpg_version(void);

/* Message for the most recent failure on this thread; static storage, do
 * not free. Empty string when no failure has occurred yet. */
const char* wlpg_last_error(void);

void wlpg_string_free(char* s);

/* Builds a graph from a one-line description:
 *   "path N" | "cycle M" | "pan M" | "tadpole M N"
 *   "union (SPEC) (SPEC)"   -- operands are full specs, nests arbitrarily
 *   "edges FILE"            -- edge-list file: "n <count>" header, one
 *                              "u v" pair per line, '#' comments
 */
wlpg_status wlpg_graph_create(const char* spec, wlpg_graph** out);
void wlpg_graph_free(wlpg_graph* g);

int wlpg_graph_vertex_count(const wlpg_graph* g);
wlpg_status wlpg_graph_name(const wlpg_graph* g, char** out);

/* Independence polynomial of the graph with unimodality/mode analysis:
 * {"graph","n","degree","coefficients","text","unimodal","mode"}, with the
 * coefficients as decimal strings. */
wlpg_status wlpg_poly_json(const wlpg_graph* g, char** out);

/* Weak Lefschetz property of A(graph): per-degree rank verdicts with
 * machine-checkable certificates, Hilbert series, mode, and timings. */
wlpg_status wlpg_wlp_json(const wlpg_graph* g, const wlpg_options* opts,
                          char** out);

/* Multiplication map out of degree j as sparse text: "rows cols nnz"
 * header, then one 0-based "row col" pair per line. */
wlpg_status wlpg_levelmap_dump(const wlpg_graph* g, int j, char** out);

/* Sweeps one family member per parameter in lo..hi and reports each WLP
 * verdict. family: "path" | "cycle" | "pan" | "tadpole-m" (cycle length
 * fixed to `fixed`, tail swept) | "tadpole-n" (tail fixed, cycle swept);
 * `fixed` is ignored for the first three. A parameter whose rank cannot
 * be certified is flagged indeterminate in place, not an error. */
wlpg_status wlpg_classify_json(const char* family, int fixed, int lo, int hi,
                               const wlpg_options* opts, char** out);

/* Same sweep as CSV rows: family,param,has_wlp,fail_degree,fail_kind,
 * seconds. has_wlp is true/false/indeterminate; the failure columns are
 * empty when they do not apply. */
wlpg_status wlpg_classify_csv(const char* family, int fixed, int lo, int hi,
                              const wlpg_options* opts, char** out);

/* Recomputes a published classification or lemma and diffs it against the
 * embedded expectation, line by line. Targets: thm-tm2, thm-tm3, thm-t4n,
 * thm-t5n, thm-paths, thm-cycles, modes, identities, or all. */
wlpg_status wlpg_reproduce_json(const char* target, const wlpg_options* opts,
                                char** out);

/* Runs the fixed self-check corpus: recurrence polynomials against brute
 * force, certified ranks against exact elimination, certificates
 * re-verified. */
wlpg_status wlpg_crosscheck_json(const wlpg_options* opts, char** out);

/* Closed form for the mode of the independence polynomial of the n-vertex
 * path; -1 with an error message if n < 1. */
int wlpg_lambda(int n);

#ifdef __cplusplus
}
#endif

#endif /* WLPGRAPH_H */
