/* toughgraph: exact graph toughness, Tutte 2-factor machinery, forbidden
 * induced path-union detection, and the G(l,m) extremal family, behind a
 * plain C (C99) surface.
 *
 * Conventions:
 *   - Every function returns a tg_status; results travel through out
 *     parameters. On failure tg_last_error() describes the problem
 *     (thread-local message).
 *   - Opaque handles are created and released in pairs (tg_*_free).
 *   - Vertex buffers are caller-allocated; a capacity of the graph's vertex
 *     count is always sufficient unless stated otherwise.
 */
#ifndef TOUGHGRAPH_H
#define TOUGHGRAPH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tg_graph tg_graph;
typedef struct tg_family tg_family;
typedef struct tg_two_factor tg_two_factor;
typedef struct tg_odd_components tg_odd_components;

typedef enum tg_status {
    TG_OK = 0,
    TG_ERR_INVALID = 1,  /* bad argument / violated precondition */
    TG_ERR_PARSE = 2,    /* malformed graph6 or edge-list text */
    TG_ERR_BUDGET = 3,   /* enumeration budget or deadline exceeded */
    TG_ERR_SEARCH = 4,   /* a documented search failure */
    TG_ERR_IO = 5,
    TG_ERR_INTERNAL = 6
} tg_status;

/* Exact fraction; is_infinite = 1 encodes the toughness of complete graphs. */
typedef struct tg_rational {
    long long num;
    long long den;
    int is_infinite;
} tg_rational;

typedef struct tg_verify_summary {
    unsigned long long examined;
    unsigned long long applicable;
    unsigned long long violations;
    unsigned long long skipped;
    long long elapsed_ms;
} tg_verify_summary;

/* Message for the most recent failing call on this thread. */
const char* tg_last_error(void);
void tg_string_free(char* s);

/* ---- graph construction and serialization ---------------------------- */

/* endpoints holds edge_count (u,v) pairs: u = endpoints[2k], v = endpoints[2k+1]. */
tg_status tg_graph_from_edge_list(int n, const int* endpoints, int edge_count, tg_graph** out);
tg_status tg_graph_from_graph6(const char* line, tg_graph** out);
/* Accepts either format: leading digit means "n m" edge-list text. */
tg_status tg_graph_from_text(const char* text, tg_graph** out);
tg_status tg_graph_to_graph6(const tg_graph* g, char** out);
tg_status tg_graph_to_edge_list_text(const tg_graph* g, char** out);
void tg_graph_free(tg_graph* g);

int tg_graph_vertex_count(const tg_graph* g);
int tg_graph_edge_count(const tg_graph* g);
int tg_graph_has_edge(const tg_graph* g, int u, int v);

/* ---- toughness -------------------------------------------------------- */

/* budget <= 0 selects the default (20 vertices). */
tg_status tg_toughness_exact(const tg_graph* g, int budget, tg_rational* value, int* witness,
                             int* witness_len);
/* *defined = 0 when omega(G-U) < 2; value untouched in that case. */
tg_status tg_cut_ratio(const tg_graph* g, const int* u, int u_len, int* defined,
                       tg_rational* value);
tg_status tg_is_t_tough(const tg_graph* g, long long t_num, long long t_den, int budget,
                        int* tough, int* counterexample, int* counterexample_len);

/* ---- forbidden induced subgraphs -------------------------------------- */

tg_status tg_find_induced_path(const tg_graph* g, int k, int* found, int* path);
/* path_a needs a ints, path_b needs b ints. */
tg_status tg_find_induced_path_union(const tg_graph* g, int a, int b, int* found, int* path_a,
                                     int* path_b);
tg_status tg_is_pa_pb_free(const tg_graph* g, int a, int b, int* free_of_pattern);
tg_status tg_is_split(const tg_graph* g, int* split, int* clique, int* clique_len,
                      int* independent, int* independent_len);

/* ---- Tutte 2-factor machinery ------------------------------------------ */

tg_status tg_eta(const tg_graph* g, const int* s, int s_len, const int* t, int t_len,
                 long long* eta, int* h);
tg_status tg_odd_components_build(const tg_graph* g, const int* s, int s_len, const int* t,
                                  int t_len, tg_odd_components** out);
int tg_odd_components_count(const tg_odd_components* oc);
/* odd: parity of edges_to_t; strong: odd with edges_to_t >= 3. */
tg_status tg_odd_components_get(const tg_odd_components* oc, int index, int* vertices,
                                int* vertex_count, int* edges_to_t, int* odd, int* strong);
void tg_odd_components_free(tg_odd_components* oc);

/* budget <= 0 selects the default (12 vertices, 3^n pairs). found = 1 means
 * a pair with eta <= -2 exists, i.e. the graph has no 2-factor. */
tg_status tg_find_tutte_pair(const tg_graph* g, int budget, int* found, int* s, int* s_len,
                             int* t, int* t_len, long long* eta, int* h);
tg_status tg_special_tutte_pair(const tg_graph* g, int budget, int* found, int* s, int* s_len,
                                int* t, int* t_len, long long* eta, int* h);

/* results[0..3]: the four special-pair properties; results[4]: claim
 * applicability (n >= 3, 3/2-tough, (P4 u P10)-free); results[5]: S nonempty
 * and |T| >= 2. The pair must be the special Tutte pair of g. */
tg_status tg_check_lemma5(const tg_graph* g, const int* s, int s_len, const int* t, int t_len,
                          int budget, int results[6]);

tg_status tg_find_two_factor(const tg_graph* g, int* found, tg_two_factor** out);
int tg_two_factor_cycle_count(const tg_two_factor* tf);
tg_status tg_two_factor_cycle(const tg_two_factor* tf, int index, int* vertices, int* length);
void tg_two_factor_free(tg_two_factor* tf);

/* mate[v] = matched partner of v, or -1. mate needs n ints. */
tg_status tg_max_matching(const tg_graph* g, int* mate);

/* Shortest induced path from start through the odd component c to another
 * vertex of u; see the library documentation for the preconditions. */
tg_status tg_basic_u_path(const tg_graph* g, const int* s, int s_len, const int* t, int t_len,
                          const int* c, int c_len, const int* u, int u_len, int start, int* path,
                          int* path_len);

/* ---- extremal family ---------------------------------------------------- */

tg_status tg_family_build(int l, int m, tg_family** out);
void tg_family_free(tg_family* f);
/* Borrowed reference, valid while the family handle lives. */
const tg_graph* tg_family_graph(const tg_family* f);
tg_status tg_family_params(const tg_family* f, int* l, int* m);
/* name is one of "S", "A", "T", "B", "W", "tutte_S", "tutte_T". */
tg_status tg_family_class(const tg_family* f, const char* name, int* vertices, int* length);
int tg_family_block_count(const tg_family* f);
tg_status tg_family_block(const tg_family* f, int index, int* vertices, int* length);
tg_status tg_family_formula_toughness(const tg_family* f, tg_rational* out);
/* Recomputes |W|/omega(G-W) from the graph and checks it against the formula. */
tg_status tg_family_witness_ratio(const tg_family* f, tg_rational* out);
tg_status tg_family_limit_check(int m, int l_from, int l_to, int* strictly_increasing,
                                int* all_below_two);

/* ---- verification pipelines --------------------------------------------- */

/* report_path: NULL for no report, "-" for stdout, otherwise a file path.
 * corpus_path: NULL for built-in labeled enumeration of n_min..n_max.
 * workers <= 0: TOUGHGRAPH_WORKERS env var, then hardware concurrency. */
tg_status tg_verify_theorem(int n_min, int n_max, long long t_num, long long t_den, int path_a,
                            int path_b, const char* corpus_path, const char* report_path,
                            int workers, long long per_graph_budget_ms,
                            tg_verify_summary* out);
tg_status tg_verify_sharpness(int l, int m, int freeness_budget, const char* report_path,
                              tg_verify_summary* out);
tg_status tg_verify_lemma5(int n_max, int workers, const char* report_path,
                           tg_verify_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* TOUGHGRAPH_H */
