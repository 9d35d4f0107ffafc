#include "anc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "anc/rate.hpp"
#include "anc/rng.hpp"

#include "json.hpp"

namespace anc {

namespace {

using nlohmann::json;

Objective objective_from_string(const std::string& s) {
  if (s == "exact") return Objective::exact;
  if (s == "zeroth") return Objective::zeroth;
  if (s == "upper") return Objective::upper;
  if (s == "lower") return Objective::lower;
  throw ConfigError("unknown objective '" + s + "'");
}

Method method_from_string(const std::string& s) {
  if (s == "grid") return Method::grid;
  if (s == "multistart_ascent") return Method::multistart_ascent;
  if (s == "sequential") return Method::sequential;
  throw ConfigError("unknown optimizer method '" + s + "'");
}

const char* method_to_string(Method m) {
  switch (m) {
    case Method::grid: return "grid";
    case Method::multistart_ascent: return "multistart_ascent";
    case Method::sequential: return "sequential";
  }
  return "?";
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void sample_gains(ChainNetwork& net, const GainDistribution& dist, Rng& rng) {
  if (dist.name == "normal")
    net.sample_gains_normal(dist.mean, dist.stddev, rng);
  else if (dist.name == "uniform")
    net.sample_gains_uniform(dist.low, dist.high, rng);
  else
    throw ConfigError("unknown gain distribution '" + dist.name + "'");
}

std::vector<double> relay_powers_for(const ExperimentConfig& config, double source_power) {
  const auto& rule = config.relay_power_rule;
  if (rule.name == "equal_to_source")
    return std::vector<double>(static_cast<size_t>(config.n_relays), source_power);
  if (rule.name == "fixed")
    return std::vector<double>(static_cast<size_t>(config.n_relays), rule.value);
  if (rule.name == "list") {
    if (static_cast<int>(rule.values.size()) != config.n_relays)
      throw ConfigError("relay_power_rule list must have one value per relay");
    return rule.values;
  }
  throw ConfigError("unknown relay_power_rule '" + rule.name + "'");
}

struct InstanceValues {
  double exact = std::numeric_limits<double>::quiet_NaN();
  double zeroth = std::numeric_limits<double>::quiet_NaN();
  double upper = std::numeric_limits<double>::quiet_NaN();
  double lower = std::numeric_limits<double>::quiet_NaN();
};

void run_parallel(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

std::string distribution_summary(const GainDistribution& d) {
  std::ostringstream os;
  if (d.name == "normal")
    os << "normal(mean=" << d.mean << ",stddev=" << d.stddev << ")";
  else if (d.name == "uniform")
    os << "uniform(low=" << d.low << ",high=" << d.high << ")";
  else
    os << d.name;
  return os.str();
}

std::string power_rule_summary(const RelayPowerRule& r) {
  std::ostringstream os;
  os << r.name;
  if (r.name == "fixed") os << "(" << r.value << ")";
  if (r.name == "list") {
    os << "(";
    for (size_t i = 0; i < r.values.size(); ++i) os << (i ? "," : "") << r.values[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  ExperimentConfig config;
  try {
    config.n_relays = j.value("n_relays", config.n_relays);
    config.k = j.value("k", config.k);
    config.noise_var = j.value("noise_var", config.noise_var);
    config.instances = j.value("instances", config.instances);
    config.seed = j.value("seed", config.seed);
    config.threads = j.value("threads", config.threads);

    if (j.contains("gain_distribution")) {
      const auto& g = j.at("gain_distribution");
      config.gain_distribution.name = g.value("name", config.gain_distribution.name);
      config.gain_distribution.mean = g.value("mean", config.gain_distribution.mean);
      config.gain_distribution.stddev = g.value("stddev", config.gain_distribution.stddev);
      config.gain_distribution.low = g.value("low", config.gain_distribution.low);
      config.gain_distribution.high = g.value("high", config.gain_distribution.high);
    }
    if (j.contains("relay_power_rule")) {
      const auto& r = j.at("relay_power_rule");
      config.relay_power_rule.name = r.value("name", config.relay_power_rule.name);
      config.relay_power_rule.value = r.value("value", config.relay_power_rule.value);
      if (r.contains("values"))
        config.relay_power_rule.values = r.at("values").get<std::vector<double>>();
    }
    if (j.contains("ps_db")) {
      const auto& p = j.at("ps_db");
      config.ps_db_start = p.value("start", config.ps_db_start);
      config.ps_db_stop = p.value("stop", config.ps_db_stop);
      config.ps_db_step = p.value("step", config.ps_db_step);
    }
    if (j.contains("objectives")) {
      config.objectives.clear();
      for (const auto& o : j.at("objectives"))
        config.objectives.push_back(objective_from_string(o.get<std::string>()));
    }
    if (j.contains("optimizer")) {
      const auto& o = j.at("optimizer");
      if (o.contains("method")) config.optimizer.method = method_from_string(o.at("method"));
      config.optimizer.grid_resolution = o.value("grid_resolution", config.optimizer.grid_resolution);
      config.optimizer.starts = o.value("starts", config.optimizer.starts);
      config.optimizer.max_evaluations = o.value("budget", config.optimizer.max_evaluations);
      config.optimizer.quad_tol = o.value("quad_tol", config.optimizer.quad_tol);
    }
    if (j.contains("output")) {
      const auto& out = j.at("output");
      config.csv_path = out.value("csv", config.csv_path);
      if (out.contains("figures")) {
        for (const auto& f : out.at("figures")) {
          FigureSpec fig;
          fig.path = f.at("path").get<std::string>();
          fig.title = f.value("title", std::string());
          if (f.contains("series"))
            fig.series = f.at("series").get<std::vector<std::string>>();
          else
            fig.series = {"exact_mean", "zeroth_mean", "ub_mean", "lb_mean"};
          config.figures.push_back(std::move(fig));
        }
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }

  if (config.n_relays < 1) throw ConfigError("n_relays must be >= 1");
  if (config.k < 1 || config.k > config.n_relays + 1)
    throw ConfigError("k must lie in [1, n_relays+1]");
  if (!(config.noise_var > 0.0)) throw ConfigError("noise_var must be > 0");
  if (config.instances < 1) throw ConfigError("instances must be >= 1");
  if (!(config.ps_db_step > 0.0)) throw ConfigError("ps_db.step must be > 0");
  if (config.ps_db_stop < config.ps_db_start) throw ConfigError("ps_db.stop must be >= start");
  if (config.objectives.empty()) throw ConfigError("objectives must be nonempty");
  if (config.gain_distribution.name != "normal" && config.gain_distribution.name != "uniform")
    throw ConfigError("unknown gain distribution '" + config.gain_distribution.name + "'");
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config) {
  std::vector<double> points;
  for (double db = config.ps_db_start; db <= config.ps_db_stop + 1e-9; db += config.ps_db_step)
    points.push_back(db);

  const auto wants = [&](Objective o) {
    return std::find(config.objectives.begin(), config.objectives.end(), o) !=
           config.objectives.end();
  };
  int threads = config.threads;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  std::vector<SweepRow> rows;
  for (size_t pi = 0; pi < points.size(); ++pi) {
    const double ps_db = points[pi];
    const double source_power = config.noise_var * std::pow(10.0, ps_db / 10.0);
    std::vector<InstanceValues> values(static_cast<size_t>(config.instances));

    run_parallel(config.instances, threads, [&](int ii) {
      const std::uint64_t instance_seed =
          derive_seed(config.seed, static_cast<std::uint64_t>(pi), static_cast<std::uint64_t>(ii));
      ChainNetwork net(config.n_relays, config.k, config.noise_var, source_power,
                       relay_powers_for(config, source_power));
      Rng rng(instance_seed);
      sample_gains(net, config.gain_distribution, rng);

      auto maximize = [&](Objective o) {
        OptimizeOptions opts = config.optimizer;
        opts.seed = derive_seed(instance_seed, 100 + static_cast<std::uint64_t>(o));
        return optimize(net, o, opts).value;
      };
      auto& v = values[static_cast<size_t>(ii)];
      if (wants(Objective::exact)) v.exact = maximize(Objective::exact);
      if (wants(Objective::zeroth)) v.zeroth = maximize(Objective::zeroth);
      if (wants(Objective::upper)) v.upper = maximize(Objective::upper);
      if (wants(Objective::lower)) v.lower = maximize(Objective::lower);
    });

    SweepRow row;
    row.ps_db = ps_db;
    row.instances = config.instances;
    row.seed = config.seed;
    double exact = 0, zeroth = 0, ub = 0, lb = 0, gap_ul = 0, gap_ze = 0;
    for (const auto& v : values) {
      exact += v.exact;
      zeroth += v.zeroth;
      ub += v.upper;
      lb += v.lower;
      gap_ul += v.upper - v.lower;
      gap_ze += std::fabs(v.zeroth - v.exact);
    }
    const double n = static_cast<double>(config.instances);
    row.exact_mean = exact / n;
    row.zeroth_mean = zeroth / n;
    row.ub_mean = ub / n;
    row.lb_mean = lb / n;
    row.gap_ub_lb = gap_ul / n;
    row.gap_zeroth_exact = gap_ze / n;
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const ExperimentConfig& config,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write CSV output: " + path);

  out << "# anc-chain sweep\n";
  out << "# n_relays=" << config.n_relays << " k=" << config.k
      << " noise_var=" << format_double(config.noise_var) << "\n";
  out << "# gain_distribution=" << distribution_summary(config.gain_distribution) << "\n";
  out << "# relay_power_rule=" << power_rule_summary(config.relay_power_rule) << "\n";
  out << "# optimizer=" << method_to_string(config.optimizer.method)
      << " starts=" << config.optimizer.starts
      << " grid_resolution=" << config.optimizer.grid_resolution
      << " budget=" << config.optimizer.max_evaluations
      << " quad_tol=" << format_double(config.optimizer.quad_tol) << "\n";
  out << "# ps_db = 10*log10(Ps/noise_var)\n";
  out << "ps_db,exact_mean,zeroth_mean,ub_mean,lb_mean,gap_ub_lb,gap_zeroth_exact,instances,seed\n";
  for (const auto& r : rows) {
    out << format_double(r.ps_db) << ',' << format_double(r.exact_mean) << ','
        << format_double(r.zeroth_mean) << ',' << format_double(r.ub_mean) << ','
        << format_double(r.lb_mean) << ',' << format_double(r.gap_ub_lb) << ','
        << format_double(r.gap_zeroth_exact) << ',' << r.instances << ',' << r.seed << '\n';
  }
  if (!out) throw IoError("write failed for CSV output: " + path);
}

namespace {

double series_value(const SweepRow& r, const std::string& name) {
  if (name == "exact_mean") return r.exact_mean;
  if (name == "zeroth_mean") return r.zeroth_mean;
  if (name == "ub_mean") return r.ub_mean;
  if (name == "lb_mean") return r.lb_mean;
  if (name == "gap_ub_lb") return r.gap_ub_lb;
  if (name == "gap_zeroth_exact") return r.gap_zeroth_exact;
  throw ConfigError("unknown series '" + name + "'");
}

double nice_step(double range, int target_ticks) {
  if (!(range > 0.0)) return 1.0;
  const double raw = range / std::max(1, target_ticks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double mult : {1.0, 2.0, 5.0, 10.0})
    if (raw <= mult * mag) return mult * mag;
  return 10.0 * mag;
}

}  // namespace

void write_sweep_svg(const std::vector<SweepRow>& rows, const FigureSpec& figure,
                     const std::string& path) {
  if (rows.empty()) throw ConfigError("cannot plot an empty sweep table");
  static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b"};
  const double width = 720, height = 480;
  const double ml = 72, mr = 24, mt = 40, mb = 56;

  double x_min = rows.front().ps_db, x_max = rows.back().ps_db;
  if (x_max <= x_min) x_max = x_min + 1.0;
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const auto& r : rows)
    for (const auto& s : figure.series) {
      const double v = series_value(r, s);
      if (std::isfinite(v)) {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
      }
    }
  if (!std::isfinite(y_min)) {
    y_min = 0.0;
    y_max = 1.0;
  }
  const double pad = 0.05 * std::max(y_max - y_min, 1e-12);
  y_min -= pad;
  y_max += pad;

  const auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr); };
  const auto py = [&](double y) {
    return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb);
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write SVG output: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!figure.title.empty())
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << figure.title << "</text>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  const double x_step = nice_step(x_max - x_min, 6);
  for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9; x += x_step) {
    out << "<line x1=\"" << px(x) << "\" y1=\"" << py(y_min) << "\" x2=\"" << px(x) << "\" y2=\""
        << py(y_max) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << px(x) << "\" y=\"" << height - mb + 18
        << "\" text-anchor=\"middle\">" << format_double(x) << "</text>\n";
  }
  const double y_step = nice_step(y_max - y_min, 6);
  for (double y = std::ceil(y_min / y_step) * y_step; y <= y_max + 1e-9; y += y_step) {
    out << "<line x1=\"" << px(x_min) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x_max)
        << "\" y2=\"" << py(y) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << ml - 8 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">"
        << format_double(y) << "</text>\n";
  }
  out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\">source power (dB)</text>\n";
  out << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (mt + height - mb) / 2
      << ")\">bits/channel use</text>\n";
  out << "</g>\n";

  out << "<line x1=\"" << px(x_min) << "\" y1=\"" << py(y_min) << "\" x2=\"" << px(x_max)
      << "\" y2=\"" << py(y_min) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << px(x_min) << "\" y1=\"" << py(y_min) << "\" x2=\"" << px(x_min)
      << "\" y2=\"" << py(y_max) << "\" stroke=\"black\"/>\n";

  for (size_t si = 0; si < figure.series.size(); ++si) {
    const char* color = kColors[si % 6];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
    for (const auto& r : rows)
      out << px(r.ps_db) << ',' << py(series_value(r, figure.series[si])) << ' ';
    out << "\"/>\n";
    const double ly = mt + 16 * static_cast<double>(si);
    out << "<line x1=\"" << ml + 12 << "\" y1=\"" << ly << "\" x2=\"" << ml + 36 << "\" y2=\"" << ly
        << "\" stroke=\"" << color << "\" stroke-width=\"1.8\"/>\n";
    out << "<text x=\"" << ml + 42 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << figure.series[si] << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failed for SVG output: " + path);
}

std::vector<SweepRow> run_experiment(const ExperimentConfig& config, bool verbose) {
  const std::vector<SweepRow> rows = run_sweep(config);
  if (verbose) {
    for (const auto& r : rows)
      std::printf("ps_db=%-6g exact=%.6f zeroth=%.6f ub=%.6f lb=%.6f gap_ub_lb=%.6f gap_zeroth_exact=%.6f\n",
                  r.ps_db, r.exact_mean, r.zeroth_mean, r.ub_mean, r.lb_mean, r.gap_ub_lb,
                  r.gap_zeroth_exact);
  }
  write_sweep_csv(rows, config, config.csv_path);
  for (const auto& figure : config.figures) write_sweep_svg(rows, figure, figure.path);
  return rows;
}

}  // namespace anc
