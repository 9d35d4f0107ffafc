/*
 * anc_chain: achievable-rate computation, approximation and bounds for
 * amplify-and-forward (N,k) chain relay networks.
 *
 * C interface to the shared library. Handles are opaque; every fallible call
 * returns an anc_status and reports detail through anc_last_error(), which is
 * thread-local and overwritten by the next failing call on the same thread.
 */
#ifndef ANC_CHAIN_H
#define ANC_CHAIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ANC_API __declspec(dllexport)
#else
#define ANC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum anc_status {
  ANC_OK = 0,
  ANC_ERR_INVALID_ARGUMENT = 1,
  ANC_ERR_NO_CONVERGENCE = 2,
  ANC_ERR_PARSE = 3,
  ANC_ERR_IO = 4,
  ANC_ERR_INTERNAL = 5
} anc_status;

ANC_API const char* anc_status_name(anc_status status);

/* Detail message for the most recent failure on the calling thread. */
ANC_API const char* anc_last_error(void);

ANC_API const char* anc_version(void);

/*
 * Network handle. Nodes are indexed 0 (source), 1..n_relays (relays),
 * n_relays+1 (destination); the edge from j to i exists iff 1 <= i-j <= k.
 * relay_powers may be NULL, which sets every relay budget to source_power.
 */
typedef struct anc_network anc_network;

ANC_API anc_status anc_network_create(int32_t n_relays, int32_t k, double noise_var,
                                      double source_power, const double* relay_powers,
                                      anc_network** out);
ANC_API void anc_network_free(anc_network* net);

ANC_API anc_status anc_network_set_gain(anc_network* net, int32_t from, int32_t to, double gain);
ANC_API anc_status anc_network_get_gain(const anc_network* net, int32_t from, int32_t to,
                                        double* gain_out);

/* i.i.d. normal gain on every edge, deterministic in the seed. */
ANC_API anc_status anc_network_sample_gains_normal(anc_network* net, double mean, double stddev,
                                                   uint64_t seed);

/* Path counting: closed-form counts and exhaustive enumeration. Delay is the
 * relay count for source paths and the edge count for relay paths. */
ANC_API anc_status anc_count_source_paths(int32_t n_relays, int32_t k, int32_t delay,
                                          uint64_t* out);
ANC_API anc_status anc_count_relay_paths(int32_t n_relays, int32_t k, int32_t relay, int32_t delay,
                                         uint64_t* out);
ANC_API anc_status anc_enumerate_path_count(int32_t n_relays, int32_t k, int32_t origin,
                                            int32_t dest, int32_t delay, uint64_t* out);

/* Largest feasible scaling for `relay` given the upstream prefix
 * beta_prefix[0..relay-2]; beta_prefix may be NULL when relay == 1. */
ANC_API anc_status anc_beta_max(const anc_network* net, const double* beta_prefix, int32_t relay,
                                double* out);

typedef struct anc_rate_report {
  double exact;   /* quadrature of the rate integral, bits/channel use */
  double zeroth;  /* endpoint-chord approximation */
  double lower;   /* tangent lower bound */
  double upper;   /* tangent upper bound */
  double slope;   /* chord slope */
  double u_max;   /* tangency abscissa of the upper bound */
  double u_min;   /* tangency abscissa of the lower bound */
} anc_rate_report;

/* beta must hold n_relays feasible entries. */
ANC_API anc_status anc_compute_rate_report(const anc_network* net, const double* beta,
                                           int32_t n_beta, double quad_tol,
                                           anc_rate_report* out);

typedef enum anc_objective {
  ANC_OBJECTIVE_EXACT = 0,
  ANC_OBJECTIVE_ZEROTH = 1,
  ANC_OBJECTIVE_UPPER = 2,
  ANC_OBJECTIVE_LOWER = 3
} anc_objective;

typedef enum anc_method {
  ANC_METHOD_GRID = 0,
  ANC_METHOD_MULTISTART_ASCENT = 1,
  ANC_METHOD_SEQUENTIAL = 2
} anc_method;

typedef struct anc_optimize_options {
  anc_method method;
  int32_t grid_resolution;
  int32_t starts;
  uint64_t seed;
  int64_t max_evaluations;
  double quad_tol;
} anc_optimize_options;

ANC_API void anc_optimize_options_init(anc_optimize_options* opts);

typedef struct anc_optimize_result {
  double value;
  int64_t evaluations;
  int32_t converged;
} anc_optimize_result;

/* beta_out must hold n_relays doubles; receives the maximizing scaling. */
ANC_API anc_status anc_optimize(const anc_network* net, anc_objective objective,
                                const anc_optimize_options* opts, double* beta_out,
                                anc_optimize_result* out);

/* Experiment sweep from a JSON config (see README for the schema); writes the
 * CSV table and any configured SVG figures. verbose != 0 prints one summary
 * line per sweep point to stdout. */
ANC_API anc_status anc_run_sweep_json(const char* config_json, int32_t verbose);
ANC_API anc_status anc_run_sweep_file(const char* config_path, int32_t verbose);

#ifdef __cplusplus
}
#endif

#endif /* ANC_CHAIN_H */
