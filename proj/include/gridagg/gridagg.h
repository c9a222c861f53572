#ifndef GRIDAGG_H
#define GRIDAGG_H

/* C interface to the flexibility aggregation library.
 *
 * Ownership: every *_load / *_parse / *_fit / *_run call hands back a handle
 * the caller frees with the matching *_free. Functions returning char* hand
 * over malloc'd UTF-8 the caller releases with ga_string_free; they return
 * NULL on failure. Functions returning int status codes write their result
 * through an out pointer only when they return GA_OK.
 *
 * Errors: nonzero status codes below. The message of the most recent failure
 * on the calling thread is readable via ga_last_error until the next call.
 *
 * Thread safety: handles are immutable after creation and may be shared
 * across threads; creation and destruction are not synchronized.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef GA_API
#define GA_API __attribute__((visibility("default")))
#endif

#define GA_OK 0
#define GA_ERR_INVALID_ARGUMENT 1 /* bad inputs, dimension or layout mismatches */
#define GA_ERR_PARSE 2            /* malformed input document */
#define GA_ERR_INFEASIBLE 3       /* a model or case admits no solution */
#define GA_ERR_UNVERIFIED 4       /* finished without the containment certificate */
#define GA_ERR_LIMIT 5            /* iteration, time, or size cap hit */
#define GA_ERR_SOLVER 6           /* backend failure */
#define GA_ERR_IO 7               /* filesystem */
#define GA_ERR_INTERNAL 8         /* invariant broken; always a bug */

typedef struct ga_case ga_case;         /* one region's grid description */
typedef struct ga_model ga_model;       /* aggregated boundary model */
typedef struct ga_cost ga_cost;         /* piecewise linear cost surfaces */
typedef struct ga_net ga_net;           /* interconnection topology */
typedef struct ga_dispatch ga_dispatch; /* coordinated boundary schedules */

GA_API const char* ga_version(void);
GA_API const char* ga_status_name(int status);
GA_API const char* ga_last_error(void); /* thread-local; empty when the last call succeeded */
GA_API void ga_string_free(char* s);

/* ------------------------------------------------------------------ cases */
GA_API int ga_case_load(const char* path, ga_case** out);
GA_API int ga_case_parse(const char* json_text, const char* origin, ga_case** out);
GA_API void ga_case_free(ga_case* c);
/* JSON summary: region id, horizon, element counts, boundary layout. */
GA_API char* ga_case_info(const ga_case* c);

/* ----------------------------------------------------------------- models */
/* Runs the full aggregation pipeline. options_json may be NULL or "{}";
 * recognized members: max_iter, envelope_max_iter, tol, seed, jobs,
 * search_time_limit, baseline_box. Returns GA_OK even when the joint loop
 * stops short of verification; inspect ga_model_verified. */
GA_API int ga_aggregate(const ga_case* c, const char* options_json, ga_model** out);
GA_API int ga_model_load(const char* path, ga_model** out);
GA_API void ga_model_free(ga_model* m);
GA_API char* ga_model_to_json(const ga_model* m);
/* Human-readable fit and loop summary; reproducible for a fixed seed. */
GA_API char* ga_model_report(const ga_model* m);
/* Wall-clock sidecar of the producing run as JSON; "{}" for loaded models. */
GA_API char* ga_model_timings(const ga_model* m);
GA_API int ga_model_verified(const ga_model* m); /* 1 verified, 0 not */

/* Monte Carlo coverage of the true boundary set plus a soundness count.
 * options_json members: samples, soundness_samples, seed, tol, jobs. */
GA_API int ga_coverage(const ga_case* c, const ga_model* m, const char* options_json,
                       char** json_out);

/* ------------------------------------------------------------------ costs */
/* Samples dispatch cost on a lattice and fits max-affine surfaces.
 * options_json members: pieces, restarts, seed, jobs, counts (per-dimension
 * lattice sizes), groups (arrays of tie ids sharing one dimension). */
GA_API int ga_cost_fit(const ga_case* c, const ga_model* m, const char* options_json,
                       ga_cost** out);
GA_API int ga_cost_load(const char* path, ga_cost** out);
GA_API void ga_cost_free(ga_cost* k);
GA_API char* ga_cost_to_json(const ga_cost* k);
/* Lattice samples behind the most recent fit as CSV; header only when the
 * handle was loaded from a file. */
GA_API char* ga_cost_samples_csv(const ga_cost* k);

/* ------------------------------------------------------------ coordination */
GA_API int ga_net_load(const char* path, ga_net** out);
GA_API void ga_net_free(ga_net* n);
/* Corridor ids, one per line. */
GA_API char* ga_net_corridors(const ga_net* n);

/* Single-solve coordinated dispatch. Models and costs are matched to net
 * regions by region id; every net region needs one of each. An infeasible
 * interconnection yields GA_OK with a non-optimal dispatch that names the
 * blocking constraint family. */
GA_API int ga_dispatch_run(const ga_model* const* models, const ga_cost* const* costs, int n,
                           const ga_net* net, ga_dispatch** out);
GA_API int ga_dispatch_load(const char* path, ga_dispatch** out);
GA_API void ga_dispatch_free(ga_dispatch* d);
GA_API char* ga_dispatch_to_json(const ga_dispatch* d);
GA_API int ga_dispatch_optimal(const ga_dispatch* d); /* 1 optimal, 0 anything else */
GA_API char* ga_dispatch_note(const ga_dispatch* d);  /* diagnosis when not optimal */
/* Per-slot endpoint powers of one corridor as CSV. */
GA_API char* ga_dispatch_tie_csv(const ga_dispatch* d, const ga_net* net,
                                 const char* corridor_id);

/* Membership + disaggregation check of one region's committed schedule;
 * writes a JSON report. ok_out (nullable) gets 1 when the schedule is in the
 * model and disaggregated, 0 otherwise. A schedule a verified model accepts
 * but the grid cannot realize returns GA_ERR_INTERNAL with a replayable
 * message. */
GA_API int ga_verify(const ga_case* c, const ga_model* m, const ga_dispatch* d,
                     char** json_out, int* ok_out);

#ifdef __cplusplus
}
#endif

#endif /* GRIDAGG_H */
