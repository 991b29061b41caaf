/* C interface of the dynamic dominators library.
 *
 * All functions return a status code (DOMDYN_OK on success) or, where a
 * value is produced, write it through an out parameter. On failure a
 * human-readable message is available from domdyn_last_error() until the
 * next API call on the same thread. Handles are opaque; every *_new /
 * *_load call is paired with the matching *_free.
 *
 * Vertices are integers in [1, n]; 0 means "none" (e.g. the idom of the
 * start vertex, or of an unreachable vertex).
 */

#ifndef DOMDYN_H
#define DOMDYN_H

#include <stdint.h>

#if defined(__cplusplus)
extern "C" {
#endif

#if defined(_WIN32)
#define DOMDYN_API __declspec(dllexport)
#else
#define DOMDYN_API __attribute__((visibility("default")))
#endif

enum {
  DOMDYN_OK = 0,
  DOMDYN_EINVAL = 1,  /* bad argument, absent edge, unknown name */
  DOMDYN_EIO = 2,     /* file could not be read, written, or parsed */
  DOMDYN_EVERIFY = 3, /* a verification run found diverging trees */
};

enum {
  DOMDYN_ALGO_SLT = 0,
  DOMDYN_ALGO_DSNCA = 1,
  DOMDYN_ALGO_DBS = 2,
  DOMDYN_ALGO_SGL = 3,
};

typedef struct domdyn_graph domdyn_graph;
typedef struct domdyn_engine domdyn_engine;

/* Message for the most recent failing call on this thread ("" if none). */
DOMDYN_API const char* domdyn_last_error(void);

/* ---- graphs ---- */

DOMDYN_API int domdyn_graph_new(int n, int start, domdyn_graph** out);
DOMDYN_API int domdyn_graph_load(const char* path, domdyn_graph** out);
DOMDYN_API int domdyn_graph_save(const domdyn_graph* g, const char* path);
DOMDYN_API void domdyn_graph_free(domdyn_graph* g);

DOMDYN_API int domdyn_graph_add_edge(domdyn_graph* g, int u, int v);
DOMDYN_API int domdyn_graph_remove_edge(domdyn_graph* g, int u, int v);
DOMDYN_API int domdyn_graph_vertex_count(const domdyn_graph* g, int* out);
DOMDYN_API int domdyn_graph_edge_count(const domdyn_graph* g, int* out);
DOMDYN_API int domdyn_graph_start(const domdyn_graph* g, int* out);

/* Writes a synthetic instance of the named family ("fig1", "fig2",
 * "random", "randdag") to path. m is ignored by fig1/fig2 (pass -1). */
DOMDYN_API int domdyn_gen_family(const char* kind, int n, int m, uint64_t seed,
                                 const char* path);

/* Splits the graph at graph_path into an initial prefix and an update
 * sequence (ifrac% insertions, dfrac% deletions) and writes it to seq_path. */
DOMDYN_API int domdyn_gen_sequence(const char* graph_path, int ifrac, int dfrac,
                                   uint64_t seed, const char* seq_path);

/* ---- engines ---- */

/* Builds an engine of the given algorithm over a snapshot of g. The engine
 * keeps its own copy; later changes to g are not seen. */
DOMDYN_API int domdyn_engine_new(int algo, const domdyn_graph* g, domdyn_engine** out);
DOMDYN_API void domdyn_engine_free(domdyn_engine* e);

DOMDYN_API int domdyn_engine_insert(domdyn_engine* e, int u, int v);
DOMDYN_API int domdyn_engine_delete(domdyn_engine* e, int u, int v);

/* idom of v; 0 for the start vertex and for unreachable vertices. */
DOMDYN_API int domdyn_engine_idom(const domdyn_engine* e, int v, int* out);
/* 1 iff u dominates v (reflexively), else 0. */
DOMDYN_API int domdyn_engine_dominates(const domdyn_engine* e, int u, int v, int* out);
/* Copies the idom of every vertex into parents[1..n]; parents[0] is set to 0.
 * parents must have room for n + 1 ints. */
DOMDYN_API int domdyn_engine_parents(const domdyn_engine* e, int* parents, int capacity);

/* ---- benchmark drivers ---- */

/* Replays the sequence at seq_path against the graph at graph_path with the
 * named algorithm ("slt", "dsnca", "dbs", "sgl"). verify_every > 0 checks
 * the tree against a reference run every that many updates. When csv_path is
 * non-NULL the measurement row is appended there (with a header when the
 * file starts empty); the row is also printed to stdout. */
DOMDYN_API int domdyn_run(const char* graph_path, const char* seq_path, const char* algo,
                          int verify_every, const char* csv_path);

/* Runs the comma-separated algorithms in lock step over the same sequence
 * and compares their trees after every update. Returns DOMDYN_EVERIFY with a
 * first-divergence message on mismatch. */
DOMDYN_API int domdyn_verify(const char* graph_path, const char* seq_path,
                             const char* algos);

#if defined(__cplusplus)
}
#endif

#endif /* DOMDYN_H */
