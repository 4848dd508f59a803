#include "geocascade/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "geocascade/io.hpp"

namespace geocascade {

namespace {

using nlohmann::json;

double need_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

long long need_integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
  return v.get<long long>();
}

bool need_bool(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw ConfigError("config key '" + key + "' must be a boolean");
  return v.get<bool>();
}

std::string need_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t need_u64(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) {
    return static_cast<std::uint64_t>(v.get<long long>());
  }
  throw ConfigError("config key '" + key + "' must be a non-negative integer");
}

SeedPolicy::Kind parse_seed_policy_name(const std::string& name) {
  if (name == "random") return SeedPolicy::Kind::random;
  if (name == "node_id") return SeedPolicy::Kind::node_id;
  if (name == "inside_hv_giant") return SeedPolicy::Kind::inside_hv_giant;
  if (name == "nearest") return SeedPolicy::Kind::nearest;
  throw ConfigError("config key 'seed_policy': unknown policy '" + name +
                    "' (expected random, node_id, inside_hv_giant, or nearest)");
}

const char* seed_policy_name(SeedPolicy::Kind kind) {
  switch (kind) {
    case SeedPolicy::Kind::random:
      return "random";
    case SeedPolicy::Kind::node_id:
      return "node_id";
    case SeedPolicy::Kind::inside_hv_giant:
      return "inside_hv_giant";
    case SeedPolicy::Kind::nearest:
      return "nearest";
  }
  return "random";
}

// Keeps free-form failure text CSV-safe.
std::string sanitize_csv_field(std::string text) {
  for (char& c : text) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

void ensure_out_dir(const std::string& out_dir) {
  if (out_dir.empty()) throw ConfigError("out directory is required for file output");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + out_dir + "': " + ec.message());
}

std::string zero_pad4(long long v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04lld", v);
  return buf;
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct MeanError {
  double mean = 0.0;
  double sem = 0.0;  // sample standard deviation / sqrt(n); 0 for n < 2
};

MeanError mean_and_stderr(const std::vector<double>& xs) {
  MeanError out;
  if (xs.empty()) return out;
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / n;
  if (xs.size() < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.sem = std::sqrt(ss / (n - 1.0) / n);
  return out;
}

}  // namespace

PointProcessSpec ExperimentConfig::point_process() const {
  if (use_fixed_count) return PointProcessSpec::fixed_count(fixed_count);
  return PointProcessSpec::poisson(lambda);
}

void ExperimentConfig::validate() const {
  if (!(region.width > 0.0)) throw ConfigError("width must be positive");
  if (!(region.height > 0.0)) throw ConfigError("height must be positive");
  if (!(radius > 0.0)) throw ConfigError("radius must be positive");
  if (use_fixed_count) {
    if (fixed_count < 0) throw ConfigError("n must be >= 0");
  } else if (!(lambda > 0.0)) {
    throw ConfigError("lambda must be positive");
  }
  if (lambda1 < 0.0) throw ConfigError("lambda1 must be >= 0");
  if (lambda1 > 0.0 && !(lambda1 < lambda)) {
    throw ConfigError("lambda1 must be smaller than lambda");
  }
  if (!state_dist.support_within_unit_interval()) {
    throw ConfigError("state_dist must be supported within (0,1]");
  }
  if (threshold_dist.kind == DistKind::exponential && !(threshold_dist.mu > 0.0)) {
    throw ConfigError("mu must be positive");
  }
  if (!(gc_threshold > 0.0) || !(gc_threshold < 1.0)) {
    throw ConfigError("gc_threshold must lie strictly between 0 and 1");
  }
  if (replicates < 1) throw ConfigError("replicates must be >= 1");
  if (!master_seed_set) {
    throw ConfigError(
        "master_seed is required: set it in the config or with --seed "
        "(the command line generates and prints one when omitted)");
  }
  if (k_max < 1) throw ConfigError("k_max must be >= 1");
  if (!(quad_tol > 0.0)) throw ConfigError("quad_tol must be positive");
  if (!(series_tol > 0.0)) throw ConfigError("series_tol must be positive");
  if (seed_policy.kind == SeedPolicy::Kind::node_id && seed_policy.node < 0) {
    throw ConfigError("seed_node must be >= 0");
  }
}

void apply_json_config(ExperimentConfig& cfg, const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object with flat keys");

  // Seed-policy pieces can arrive in any key order; merge after the loop. An
  // explicit seed_policy wins over the kind implied by seed_node/seed_x.
  std::optional<std::string> policy_name;
  std::optional<long long> seed_node;
  std::optional<double> seed_x;
  std::optional<double> seed_y;

  for (const auto& [key, value] : doc.items()) {
    if (key == "width") {
      cfg.region.width = need_number(value, key);
    } else if (key == "height") {
      cfg.region.height = need_number(value, key);
    } else if (key == "torus") {
      cfg.region.boundary = need_bool(value, key) ? Boundary::torus : Boundary::box;
    } else if (key == "radius") {
      cfg.radius = need_number(value, key);
    } else if (key == "lambda") {
      cfg.lambda = need_number(value, key);
    } else if (key == "lambda1") {
      cfg.lambda1 = need_number(value, key);
    } else if (key == "mu") {
      const double mu = need_number(value, key);
      if (!(mu > 0.0)) throw ConfigError("config key 'mu' must be positive");
      cfg.threshold_dist = DistributionSpec::exponential(mu);
    } else if (key == "n") {
      const long long n = need_integer(value, key);
      if (n < 0) throw ConfigError("config key 'n' must be >= 0");
      cfg.use_fixed_count = true;
      cfg.fixed_count = n;
    } else if (key == "state_dist") {
      if (need_string(value, key) != "uniform") {
        throw ConfigError("config key 'state_dist': only 'uniform' is supported");
      }
      cfg.state_dist = DistributionSpec::uniform_unit();
    } else if (key == "threshold_dist") {
      if (need_string(value, key) != "exponential") {
        throw ConfigError("config key 'threshold_dist': only 'exponential' is supported");
      }
    } else if (key == "seed_policy") {
      policy_name = need_string(value, key);
    } else if (key == "seed_node") {
      seed_node = need_integer(value, key);
    } else if (key == "seed_x") {
      seed_x = need_number(value, key);
    } else if (key == "seed_y") {
      seed_y = need_number(value, key);
    } else if (key == "gc_threshold") {
      cfg.gc_threshold = need_number(value, key);
    } else if (key == "replicates") {
      cfg.replicates = need_integer(value, key);
    } else if (key == "master_seed") {
      cfg.master_seed = need_u64(value, key);
      cfg.master_seed_set = true;
    } else if (key == "out") {
      cfg.out_dir = need_string(value, key);
    } else if (key == "k_max") {
      cfg.k_max = static_cast<int>(need_integer(value, key));
    } else if (key == "quad_tol") {
      cfg.quad_tol = need_number(value, key);
    } else if (key == "series_tol") {
      cfg.series_tol = need_number(value, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  if (seed_node) {
    cfg.seed_policy.node = static_cast<int>(*seed_node);
    if (!policy_name) policy_name = "node_id";
  }
  if (seed_x || seed_y) {
    if (!seed_x || !seed_y) {
      throw ConfigError("config keys 'seed_x' and 'seed_y' must be given together");
    }
    cfg.seed_policy.x = *seed_x;
    cfg.seed_policy.y = *seed_y;
    if (!policy_name) policy_name = "nearest";
  }
  if (policy_name) cfg.seed_policy.kind = parse_seed_policy_name(*policy_name);
}

std::string run_config_json(const ExperimentConfig& cfg) {
  json j;
  j["width"] = cfg.region.width;
  j["height"] = cfg.region.height;
  j["torus"] = cfg.region.boundary == Boundary::torus;
  j["radius"] = cfg.radius;
  j["lambda"] = cfg.lambda;
  if (cfg.lambda1 > 0.0) j["lambda1"] = cfg.lambda1;
  if (cfg.threshold_dist.kind == DistKind::exponential) j["mu"] = cfg.threshold_dist.mu;
  if (cfg.use_fixed_count) j["n"] = cfg.fixed_count;
  j["state_dist"] = "uniform";
  j["threshold_dist"] = "exponential";
  j["seed_policy"] = seed_policy_name(cfg.seed_policy.kind);
  if (cfg.seed_policy.kind == SeedPolicy::Kind::node_id) j["seed_node"] = cfg.seed_policy.node;
  if (cfg.seed_policy.kind == SeedPolicy::Kind::nearest) {
    j["seed_x"] = cfg.seed_policy.x;
    j["seed_y"] = cfg.seed_policy.y;
  }
  j["gc_threshold"] = cfg.gc_threshold;
  j["replicates"] = cfg.replicates;
  j["master_seed"] = cfg.master_seed;
  j["k_max"] = cfg.k_max;
  j["quad_tol"] = cfg.quad_tol;
  j["series_tol"] = cfg.series_tol;
  if (!cfg.out_dir.empty()) j["out"] = cfg.out_dir;
  return j.dump(2) + "\n";
}

ReplicateOutcome run_replicate(const ExperimentConfig& cfg, std::uint64_t grid_index,
                               long long replicate_index) {
  const auto rep = static_cast<std::uint64_t>(replicate_index);
  RandomStream position_rng(
      derive_seed(cfg.master_seed, grid_index, rep, StreamPurpose::positions));
  RandomStream state_rng(derive_seed(cfg.master_seed, grid_index, rep, StreamPurpose::states));
  RandomStream threshold_rng(
      derive_seed(cfg.master_seed, grid_index, rep, StreamPurpose::thresholds));
  RandomStream seed_rng(derive_seed(cfg.master_seed, grid_index, rep, StreamPurpose::seed_pick));

  ReplicateOutcome out;
  std::vector<Point> points = sample_points(cfg.region, cfg.point_process(), position_rng);
  out.graph = build_graph(std::move(points), cfg.radius, cfg.region);
  out.ensemble =
      assign_attributes(out.graph, cfg.state_dist, cfg.threshold_dist, state_rng, threshold_rng);

  ReplicateSummary& s = out.summary;
  s.replicate = replicate_index;
  s.n = out.graph.node_count();

  std::vector<int> seeds;
  try {
    seeds = pick_seed(out.graph, out.ensemble, cfg.seed_policy, seed_rng);
    s.seed_node = seeds.empty() ? -1 : seeds.front();
  } catch (const SeedPolicyError& e) {
    s.seed_status = sanitize_csv_field(e.what());
  }
  if (s.seed_status == "ok") {
    out.cascade = run_cascade(out.graph, out.ensemble, seeds);
    s.rounds = static_cast<long long>(out.cascade.rounds.size());
  }

  const ComponentReport hv = components(out.graph, out.ensemble.hv_subset());
  const ComponentReport weak = components(out.graph, out.ensemble.weak_subset());
  const ComponentReport failed = components(out.graph, out.ensemble.failed_subset());
  s.hv_count = hv.subset_size;
  s.weak_count = weak.subset_size;
  s.failed_count = failed.subset_size;
  s.hv_largest_fraction = hv.largest_fraction;
  s.weak_largest_fraction = weak.largest_fraction;
  s.failed_largest_fraction = failed.largest_fraction;
  s.hv_gc = gc_present_at_network_scale(hv, cfg.gc_threshold, s.n);
  s.weak_gc = gc_present_at_network_scale(weak, cfg.gc_threshold, s.n);
  s.cascade = gc_present_at_network_scale(failed, cfg.gc_threshold, s.n);
  return out;
}

std::string summary_csv_header() {
  return "replicate,n,seed_node,seed_status,hv_count,hv_largest_fraction,hv_gc,"
         "weak_count,weak_largest_fraction,weak_gc,failed_count,failed_largest_fraction,"
         "cascade,rounds\n";
}

std::string summary_csv_row(const ReplicateSummary& s) {
  std::string row;
  row += std::to_string(s.replicate);
  row += ',';
  row += std::to_string(s.n);
  row += ',';
  row += std::to_string(s.seed_node);
  row += ',';
  row += s.seed_status;
  row += ',';
  row += std::to_string(s.hv_count);
  row += ',';
  row += format_fixed6(s.hv_largest_fraction);
  row += ',';
  row += s.hv_gc ? '1' : '0';
  row += ',';
  row += std::to_string(s.weak_count);
  row += ',';
  row += format_fixed6(s.weak_largest_fraction);
  row += ',';
  row += s.weak_gc ? '1' : '0';
  row += ',';
  row += std::to_string(s.failed_count);
  row += ',';
  row += format_fixed6(s.failed_largest_fraction);
  row += ',';
  row += s.cascade ? '1' : '0';
  row += ',';
  row += std::to_string(s.rounds);
  row += '\n';
  return row;
}

SimulationResult run_simulation(const ExperimentConfig& cfg, bool write_files) {
  cfg.validate();
  if (write_files) ensure_out_dir(cfg.out_dir);

  SimulationResult result;
  std::string summary = summary_csv_header();
  for (long long rep = 0; rep < cfg.replicates; ++rep) {
    ReplicateOutcome outcome = run_replicate(cfg, 0, rep);
    if (write_files) {
      write_ensemble_csv(cfg.out_dir + "/nodes_" + zero_pad4(rep) + ".csv", outcome.graph,
                         outcome.ensemble);
    }
    summary += summary_csv_row(outcome.summary);
    result.summaries.push_back(std::move(outcome.summary));
  }
  if (write_files) {
    write_text_file(cfg.out_dir + "/summary.csv", summary);
    write_text_file(cfg.out_dir + "/run_config.json", run_config_json(cfg));
  }
  return result;
}

std::vector<double> parse_mu_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ':')) parts.push_back(part);
  if (parts.size() != 3) {
    throw ConfigError("mu grid must have the form a:b:step, got '" + text + "'");
  }

  const auto parse = [&](const std::string& field, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size() || field.empty()) {
      throw ConfigError(std::string("mu grid ") + what + " is not a number: '" + field + "'");
    }
    return v;
  };
  const double a = parse(parts[0], "start");
  const double b = parse(parts[1], "end");
  const double step = parse(parts[2], "step");
  if (!(a > 0.0)) throw ConfigError("mu grid start must be positive");
  if (!(step > 0.0)) throw ConfigError("mu grid step must be positive");
  if (b < a) throw ConfigError("mu grid end must be >= start");

  std::vector<double> grid;
  for (long long i = 0;; ++i) {
    const double v = a + step * static_cast<double>(i);
    if (v > b + 1e-9 * step) break;  // fp guard so the end point is kept
    grid.push_back(std::min(v, b));
    if (grid.size() > 1000000) throw ConfigError("mu grid has more than 1e6 points");
  }
  return grid;
}

std::string sweep_csv_header() {
  return "mu,replicates,hv_fraction_mean,hv_fraction_stderr,weak_fraction_mean,"
         "weak_fraction_stderr,failed_fraction_mean,failed_fraction_stderr,"
         "hv_gc_rate,weak_gc_rate,cascade_rate\n";
}

std::string sweep_csv_row(const SweepRow& row) {
  std::string out;
  out += fmt_g(row.mu);
  out += ',';
  out += std::to_string(row.replicates);
  out += ',';
  out += format_fixed6(row.hv_fraction_mean);
  out += ',';
  out += format_fixed6(row.hv_fraction_stderr);
  out += ',';
  out += format_fixed6(row.weak_fraction_mean);
  out += ',';
  out += format_fixed6(row.weak_fraction_stderr);
  out += ',';
  out += format_fixed6(row.failed_fraction_mean);
  out += ',';
  out += format_fixed6(row.failed_fraction_stderr);
  out += ',';
  out += format_fixed6(row.hv_gc_rate);
  out += ',';
  out += format_fixed6(row.weak_gc_rate);
  out += ',';
  out += format_fixed6(row.cascade_rate);
  out += '\n';
  return out;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, const std::vector<double>& mu_values,
                                bool write_files) {
  cfg.validate();
  if (mu_values.empty()) throw ConfigError("mu grid must be nonempty");
  for (std::size_t i = 0; i < mu_values.size(); ++i) {
    if (!(mu_values[i] > 0.0)) throw ConfigError("mu grid values must be positive");
    if (i > 0 && !(mu_values[i] > mu_values[i - 1])) {
      throw ConfigError("mu grid must be strictly ascending");
    }
  }
  if (write_files) ensure_out_dir(cfg.out_dir);

  std::vector<SweepRow> rows;
  for (std::size_t g = 0; g < mu_values.size(); ++g) {
    ExperimentConfig point = cfg;
    point.threshold_dist = DistributionSpec::exponential(mu_values[g]);

    std::vector<double> hv_fracs, weak_fracs, failed_fracs;
    long long hv_hits = 0, weak_hits = 0, cascade_hits = 0;
    for (long long rep = 0; rep < cfg.replicates; ++rep) {
      const ReplicateSummary s = run_replicate(point, g, rep).summary;
      hv_fracs.push_back(s.hv_largest_fraction);
      weak_fracs.push_back(s.weak_largest_fraction);
      failed_fracs.push_back(s.n > 0 ? static_cast<double>(s.failed_count) /
                                           static_cast<double>(s.n)
                                     : 0.0);
      hv_hits += s.hv_gc ? 1 : 0;
      weak_hits += s.weak_gc ? 1 : 0;
      cascade_hits += s.cascade ? 1 : 0;
    }

    SweepRow row;
    row.mu = mu_values[g];
    row.replicates = cfg.replicates;
    const MeanError hv = mean_and_stderr(hv_fracs);
    const MeanError weak = mean_and_stderr(weak_fracs);
    const MeanError failed = mean_and_stderr(failed_fracs);
    row.hv_fraction_mean = hv.mean;
    row.hv_fraction_stderr = hv.sem;
    row.weak_fraction_mean = weak.mean;
    row.weak_fraction_stderr = weak.sem;
    row.failed_fraction_mean = failed.mean;
    row.failed_fraction_stderr = failed.sem;
    const double r = static_cast<double>(cfg.replicates);
    row.hv_gc_rate = static_cast<double>(hv_hits) / r;
    row.weak_gc_rate = static_cast<double>(weak_hits) / r;
    row.cascade_rate = static_cast<double>(cascade_hits) / r;
    rows.push_back(row);
  }

  if (write_files) {
    std::string csv = sweep_csv_header();
    for (const SweepRow& row : rows) csv += sweep_csv_row(row);
    write_text_file(cfg.out_dir + "/sweep.csv", csv);
    write_text_file(cfg.out_dir + "/run_config.json", run_config_json(cfg));
  }
  return rows;
}

std::string analysis_csv(const AnalysisReport& report) {
  std::string csv = "quantity,k,value,error_bound\n";
  const auto scalar_row = [&csv](const char* quantity, double value, double err) {
    csv += quantity;
    csv += ",,";
    csv += format_sci(value);
    csv += ',';
    csv += format_sci(err);
    csv += '\n';
  };

  for (int k = 1; k <= report.k_max; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    csv += "vulnerability_prob," + std::to_string(k) + ',' + format_sci(report.vulnerability[i]) +
           ',' + format_sci(report.vulnerability_err[i]) + '\n';
  }
  for (int k = 1; k <= report.k_max; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    csv += "reliability_prob," + std::to_string(k) + ',' + format_sci(report.reliability[i]) +
           ',' + format_sci(report.reliability_err[i]) + '\n';
  }
  if (report.has_degree_condition) {
    scalar_row("degree_condition_ratio", report.degree_condition.ratio, 0.0);
    for (const DegreeConditionRow& row : report.degree_condition.rows) {
      const auto i = static_cast<std::size_t>(row.k - 1);
      csv += "degree_condition_lhs," + std::to_string(row.k) + ',' + format_sci(row.lhs) + ',' +
             format_sci(report.vulnerability_err[i]) + '\n';
    }
  }
  scalar_row("weak_series_value", report.weak_series.value, report.weak_series.truncation_bound);
  if (report.has_rate_bound) scalar_row("rate_bound", report.rate_bound, 1e-10);
  scalar_row("critical_rate", report.critical_rate, 0.25);
  return csv;
}

std::string analysis_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "Analytic report\n";
  out << "===============\n";
  out << "inputs: lambda=" << fmt_g(report.lambda);
  if (report.lambda1 > 0.0) out << ", lambda1=" << fmt_g(report.lambda1);
  out << ", states ~ " << report.state_dist.describe() << ", thresholds ~ "
      << report.threshold_dist.describe() << ", k_max=" << report.k_max << "\n\n";

  out << "Per-degree class probabilities (one-neighbor bracket to the k-th power):\n";
  out << "  k   vulnerability       reliability\n";
  for (int k = 1; k <= report.k_max; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    char line[128];
    std::snprintf(line, sizeof(line), "  %-3d %-19.10e %-19.10e\n", k, report.vulnerability[i],
                  report.reliability[i]);
    out << line;
  }
  out << '\n';

  if (report.has_degree_condition) {
    const DegreeConditionReport& dc = report.degree_condition;
    out << "Degree condition: vulnerability_prob(k) >= lambda1/lambda = " << fmt_g(dc.ratio)
        << "\n";
    if (dc.prefix == report.k_max) {
      out << "  holds for every checked degree k = 1.." << report.k_max << "\n";
    } else if (dc.prefix == 0) {
      out << "  fails already at k = 1\n";
    } else {
      out << "  holds for k = 1.." << dc.prefix << ", first failure at k = " << (dc.prefix + 1)
          << "\n";
    }
    out << "  note: " << dc.caveat << "\n\n";
  }

  if (report.has_rate_bound) {
    out << "Closed-form rate bound (exponential thresholds, uniform states):\n";
    out << "  largest rate keeping the degree-1 condition: " << fmt_g(report.rate_bound)
        << "\n";
    if (report.threshold_dist.kind == DistKind::exponential) {
      out << "  threshold rate " << fmt_g(report.threshold_dist.mu)
          << (report.rate_bound_pass
                  ? " < bound: a giant highly-vulnerable component is predicted\n"
                  : " >= bound: no conclusion from this condition\n");
    }
    out << '\n';
  }

  out << "Weak-component series bound:\n";
  out << "  value = " << format_sci(report.weak_series.value)
      << ", truncation <= " << format_sci(report.weak_series.truncation_bound) << " (kept k <= "
      << report.weak_series.k_terms << ", m <= " << report.weak_series.m_terms << ")\n";
  out << "  verdict: value + truncation "
      << (report.weak_series.satisfied ? "< 1/27: no giant weak component is predicted\n"
                                       : ">= 1/27: no conclusion from this condition\n");
  out << '\n';

  out << "Smallest threshold rate satisfying the series bound at this density: "
      << fmt_g(report.critical_rate) << " (bisection width 0.5)\n";
  return out.str();
}

void write_analysis_files(const std::string& out_dir, const AnalysisReport& report) {
  ensure_out_dir(out_dir);
  write_text_file(out_dir + "/analysis.csv", analysis_csv(report));
  write_text_file(out_dir + "/analysis.txt", analysis_text(report));
}

}  // namespace geocascade
