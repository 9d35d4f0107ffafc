#include "anc_chain.h"

#include <cstring>
#include <string>

#include "anc/chain_network.hpp"
#include "anc/gains.hpp"
#include "anc/optimize.hpp"
#include "anc/paths.hpp"
#include "anc/rate.hpp"
#include "anc/rng.hpp"
#include "anc/sweep.hpp"

struct anc_network {
  anc::ChainNetwork impl;
};

namespace {

thread_local std::string g_last_error;

anc_status fail(anc_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <class Fn>
anc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const anc::QuadratureError& e) {
    return fail(ANC_ERR_NO_CONVERGENCE, e.what());
  } catch (const anc::ConfigError& e) {
    return fail(ANC_ERR_PARSE, e.what());
  } catch (const anc::IoError& e) {
    return fail(ANC_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ANC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ANC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ANC_ERR_INTERNAL, "unknown error");
  }
}

anc_status require(bool ok, const char* what) {
  return ok ? ANC_OK : fail(ANC_ERR_INVALID_ARGUMENT, what);
}

}  // namespace

extern "C" {

const char* anc_status_name(anc_status status) {
  switch (status) {
    case ANC_OK: return "ok";
    case ANC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ANC_ERR_NO_CONVERGENCE: return "no convergence";
    case ANC_ERR_PARSE: return "parse error";
    case ANC_ERR_IO: return "I/O error";
    case ANC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* anc_last_error(void) { return g_last_error.c_str(); }

const char* anc_version(void) { return "anc-chain 1.0.0"; }

anc_status anc_network_create(int32_t n_relays, int32_t k, double noise_var, double source_power,
                              const double* relay_powers, anc_network** out) {
  if (anc_status s = require(out != nullptr, "anc_network_create: out is NULL")) return s;
  *out = nullptr;
  return guarded([&] {
    std::vector<double> powers;
    if (relay_powers != nullptr)
      powers.assign(relay_powers, relay_powers + (n_relays > 0 ? n_relays : 0));
    else
      powers.assign(static_cast<size_t>(n_relays > 0 ? n_relays : 0), source_power);
    *out = new anc_network{anc::ChainNetwork(n_relays, k, noise_var, source_power, powers)};
    return ANC_OK;
  });
}

void anc_network_free(anc_network* net) { delete net; }

anc_status anc_network_set_gain(anc_network* net, int32_t from, int32_t to, double gain) {
  if (anc_status s = require(net != nullptr, "anc_network_set_gain: net is NULL")) return s;
  return guarded([&] {
    net->impl.set_gain(from, to, gain);
    return ANC_OK;
  });
}

anc_status anc_network_get_gain(const anc_network* net, int32_t from, int32_t to,
                                double* gain_out) {
  if (anc_status s = require(net != nullptr && gain_out != nullptr,
                             "anc_network_get_gain: NULL argument"))
    return s;
  return guarded([&] {
    *gain_out = net->impl.gain(from, to);
    return ANC_OK;
  });
}

anc_status anc_network_sample_gains_normal(anc_network* net, double mean, double stddev,
                                           uint64_t seed) {
  if (anc_status s = require(net != nullptr, "anc_network_sample_gains_normal: net is NULL"))
    return s;
  return guarded([&] {
    anc::Rng rng(seed);
    net->impl.sample_gains_normal(mean, stddev, rng);
    return ANC_OK;
  });
}

anc_status anc_count_source_paths(int32_t n_relays, int32_t k, int32_t delay, uint64_t* out) {
  if (anc_status s = require(out != nullptr, "anc_count_source_paths: out is NULL")) return s;
  return guarded([&] {
    *out = anc::count_source_paths(n_relays, k, delay);
    return ANC_OK;
  });
}

anc_status anc_count_relay_paths(int32_t n_relays, int32_t k, int32_t relay, int32_t delay,
                                 uint64_t* out) {
  if (anc_status s = require(out != nullptr, "anc_count_relay_paths: out is NULL")) return s;
  return guarded([&] {
    *out = anc::count_relay_paths(n_relays, k, relay, delay);
    return ANC_OK;
  });
}

anc_status anc_enumerate_path_count(int32_t n_relays, int32_t k, int32_t origin, int32_t dest,
                                    int32_t delay, uint64_t* out) {
  if (anc_status s = require(out != nullptr, "anc_enumerate_path_count: out is NULL")) return s;
  return guarded([&] {
    anc::ChainNetwork net(n_relays, k, 1.0, 1.0, 1.0);
    const anc::PathsByDelay groups = anc::enumerate_paths(net, origin, dest);
    const auto it = groups.find(delay);
    *out = it == groups.end() ? 0 : static_cast<uint64_t>(it->second.size());
    return ANC_OK;
  });
}

anc_status anc_beta_max(const anc_network* net, const double* beta_prefix, int32_t relay,
                        double* out) {
  if (anc_status s = require(net != nullptr && out != nullptr, "anc_beta_max: NULL argument"))
    return s;
  if (anc_status s = require(beta_prefix != nullptr || relay <= 1,
                             "anc_beta_max: beta_prefix is NULL but relay > 1"))
    return s;
  return guarded([&] {
    anc::ScalingVector prefix;
    if (relay > 1) prefix.assign(beta_prefix, beta_prefix + (relay - 1));
    *out = anc::beta_max(net->impl, prefix, relay);
    return ANC_OK;
  });
}

anc_status anc_compute_rate_report(const anc_network* net, const double* beta, int32_t n_beta,
                                   double quad_tol, anc_rate_report* out) {
  if (anc_status s = require(net != nullptr && beta != nullptr && out != nullptr,
                             "anc_compute_rate_report: NULL argument"))
    return s;
  if (anc_status s = require(n_beta == net->impl.n_relays(),
                             "anc_compute_rate_report: need one beta per relay"))
    return s;
  return guarded([&] {
    const anc::ScalingVector b(beta, beta + n_beta);
    if (!anc::is_feasible(net->impl, b))
      throw std::invalid_argument(
          "anc_compute_rate_report: beta violates the nested feasibility bounds");
    const anc::RateReport r = anc::rate_report(anc::build_spectral_ratio(net->impl, b), quad_tol);
    out->exact = r.exact;
    out->zeroth = r.zeroth;
    out->lower = r.lower;
    out->upper = r.upper;
    out->slope = r.slope;
    out->u_max = r.u_max;
    out->u_min = r.u_min;
    return ANC_OK;
  });
}

void anc_optimize_options_init(anc_optimize_options* opts) {
  if (opts == nullptr) return;
  const anc::OptimizeOptions defaults;
  opts->method = ANC_METHOD_MULTISTART_ASCENT;
  opts->grid_resolution = defaults.grid_resolution;
  opts->starts = defaults.starts;
  opts->seed = defaults.seed;
  opts->max_evaluations = defaults.max_evaluations;
  opts->quad_tol = defaults.quad_tol;
}

anc_status anc_optimize(const anc_network* net, anc_objective objective,
                        const anc_optimize_options* opts, double* beta_out,
                        anc_optimize_result* out) {
  if (anc_status s = require(net != nullptr && beta_out != nullptr && out != nullptr,
                             "anc_optimize: NULL argument"))
    return s;
  return guarded([&] {
    anc::OptimizeOptions options;
    if (opts != nullptr) {
      switch (opts->method) {
        case ANC_METHOD_GRID: options.method = anc::Method::grid; break;
        case ANC_METHOD_MULTISTART_ASCENT: options.method = anc::Method::multistart_ascent; break;
        case ANC_METHOD_SEQUENTIAL: options.method = anc::Method::sequential; break;
        default: throw std::invalid_argument("anc_optimize: unknown method");
      }
      options.grid_resolution = opts->grid_resolution;
      options.starts = opts->starts;
      options.seed = opts->seed;
      options.max_evaluations = opts->max_evaluations;
      options.quad_tol = opts->quad_tol;
    }
    anc::Objective obj;
    switch (objective) {
      case ANC_OBJECTIVE_EXACT: obj = anc::Objective::exact; break;
      case ANC_OBJECTIVE_ZEROTH: obj = anc::Objective::zeroth; break;
      case ANC_OBJECTIVE_UPPER: obj = anc::Objective::upper; break;
      case ANC_OBJECTIVE_LOWER: obj = anc::Objective::lower; break;
      default: throw std::invalid_argument("anc_optimize: unknown objective");
    }
    const anc::OptimizationResult r = anc::optimize(net->impl, obj, options);
    std::memcpy(beta_out, r.beta_star.data(), r.beta_star.size() * sizeof(double));
    out->value = r.value;
    out->evaluations = r.evaluations;
    out->converged = r.converged ? 1 : 0;
    return ANC_OK;
  });
}

anc_status anc_run_sweep_json(const char* config_json, int32_t verbose) {
  if (anc_status s = require(config_json != nullptr, "anc_run_sweep_json: config is NULL"))
    return s;
  return guarded([&] {
    anc::run_experiment(anc::parse_experiment_config(config_json), verbose != 0);
    return ANC_OK;
  });
}

anc_status anc_run_sweep_file(const char* config_path, int32_t verbose) {
  if (anc_status s = require(config_path != nullptr, "anc_run_sweep_file: path is NULL")) return s;
  return guarded([&] {
    anc::run_experiment(anc::load_experiment_config(config_path), verbose != 0);
    return ANC_OK;
  });
}

}  // extern "C"
