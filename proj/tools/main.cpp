#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geocascade/errors.hpp"
#include "geocascade/experiment.hpp"
#include "geocascade/io.hpp"
#include "geocascade/svg.hpp"

namespace {

using namespace geocascade;

// Values stay unset unless the flag was given, so config-file settings are
// only overridden by flags that actually appeared.
struct Flags {
  std::optional<std::string> config;
  std::optional<double> lambda;
  std::optional<double> lambda1;
  std::optional<double> mu;
  std::optional<long long> n;
  std::vector<double> box;  // W H
  bool torus = false;
  bool no_torus = false;
  std::optional<double> radius;
  std::optional<long long> replicates;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> mu_grid;
  std::optional<double> gc_threshold;
  std::optional<std::string> seed_policy;
  std::optional<long long> seed_node;
  std::optional<double> seed_x;
  std::optional<double> seed_y;
  std::optional<int> k_max;
  std::optional<double> quad_tol;
  std::optional<double> series_tol;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file (flags override its values)");
  cmd->add_option("--lambda", f.lambda, "node density per unit area");
  cmd->add_option("--lambda1", f.lambda1, "target density of the vulnerable subnetwork");
  cmd->add_option("--mu", f.mu, "exponential threshold rate");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--k-max", f.k_max, "largest degree in per-degree tables");
  cmd->add_option("--quad-tol", f.quad_tol, "quadrature error target");
  cmd->add_option("--series-tol", f.series_tol, "series truncation target");
}

void add_sim_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "fixed node count (instead of Poisson sampling)");
  cmd->add_option("--box", f.box, "region size: width height")->expected(2);
  cmd->add_flag("--torus", f.torus, "periodic boundaries");
  cmd->add_flag("--no-torus", f.no_torus, "hard box boundaries");
  cmd->add_option("--radius", f.radius, "connection radius");
  cmd->add_option("--replicates", f.replicates, "number of replicates");
  cmd->add_option("--seed", f.seed, "64-bit master seed (generated and printed when omitted)");
  cmd->add_option("--gc-threshold", f.gc_threshold, "giant-component fraction cutoff");
  cmd->add_option("--seed-policy", f.seed_policy,
                  "initial failure choice: random, node_id, inside_hv_giant, nearest");
  cmd->add_option("--seed-node", f.seed_node, "node id for the node_id policy");
  cmd->add_option("--seed-x", f.seed_x, "x target for the nearest policy");
  cmd->add_option("--seed-y", f.seed_y, "y target for the nearest policy");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExperimentConfig build_config(const Flags& f) {
  ExperimentConfig cfg;
  if (f.config) apply_json_config(cfg, read_file(*f.config));

  if (f.lambda) cfg.lambda = *f.lambda;
  if (f.lambda1) cfg.lambda1 = *f.lambda1;
  if (f.mu) {
    if (!(*f.mu > 0.0)) throw ConfigError("mu must be positive");
    cfg.threshold_dist = DistributionSpec::exponential(*f.mu);
  }
  if (f.n) {
    if (*f.n < 0) throw ConfigError("n must be >= 0");
    cfg.use_fixed_count = true;
    cfg.fixed_count = *f.n;
  }
  if (!f.box.empty()) {
    cfg.region.width = f.box[0];
    cfg.region.height = f.box[1];
  }
  if (f.torus) cfg.region.boundary = Boundary::torus;
  if (f.no_torus) cfg.region.boundary = Boundary::box;
  if (f.radius) cfg.radius = *f.radius;
  if (f.replicates) cfg.replicates = *f.replicates;
  if (f.seed) {
    cfg.master_seed = *f.seed;
    cfg.master_seed_set = true;
  }
  if (f.out) cfg.out_dir = *f.out;
  if (f.gc_threshold) cfg.gc_threshold = *f.gc_threshold;
  if (f.seed_policy) {
    SeedPolicy policy = cfg.seed_policy;
    if (*f.seed_policy == "random") {
      policy.kind = SeedPolicy::Kind::random;
    } else if (*f.seed_policy == "node_id") {
      policy.kind = SeedPolicy::Kind::node_id;
    } else if (*f.seed_policy == "inside_hv_giant") {
      policy.kind = SeedPolicy::Kind::inside_hv_giant;
    } else if (*f.seed_policy == "nearest") {
      policy.kind = SeedPolicy::Kind::nearest;
    } else {
      throw ConfigError("unknown seed policy '" + *f.seed_policy + "'");
    }
    cfg.seed_policy = policy;
  }
  if (f.seed_node) {
    cfg.seed_policy.node = static_cast<int>(*f.seed_node);
    if (!f.seed_policy) cfg.seed_policy.kind = SeedPolicy::Kind::node_id;
  }
  if (f.seed_x || f.seed_y) {
    if (!f.seed_x || !f.seed_y) throw ConfigError("--seed-x and --seed-y must be given together");
    cfg.seed_policy.x = *f.seed_x;
    cfg.seed_policy.y = *f.seed_y;
    if (!f.seed_policy) cfg.seed_policy.kind = SeedPolicy::Kind::nearest;
  }
  if (f.k_max) cfg.k_max = *f.k_max;
  if (f.quad_tol) cfg.quad_tol = *f.quad_tol;
  if (f.series_tol) cfg.series_tol = *f.series_tol;
  return cfg;
}

void require_master_seed(ExperimentConfig& cfg) {
  if (cfg.master_seed_set) return;
  std::random_device rd;
  cfg.master_seed = (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
  cfg.master_seed_set = true;
  std::cout << "generated master_seed: " << cfg.master_seed << "\n";
}

int run_analyze(const Flags& f) {
  const ExperimentConfig cfg = build_config(f);
  const AnalysisReport report =
      build_analysis_report(cfg.state_dist, cfg.threshold_dist, cfg.lambda, cfg.lambda1,
                            cfg.k_max, cfg.quad_tol, cfg.series_tol);
  std::cout << analysis_text(report);
  if (!cfg.out_dir.empty()) {
    write_analysis_files(cfg.out_dir, report);
    std::cout << "wrote " << cfg.out_dir << "/analysis.csv and analysis.txt\n";
  }
  return 0;
}

int run_simulate(const Flags& f) {
  ExperimentConfig cfg = build_config(f);
  require_master_seed(cfg);
  const bool write_files = !cfg.out_dir.empty();
  const SimulationResult result = run_simulation(cfg, write_files);
  if (write_files) {
    std::cout << "wrote " << result.summaries.size() << " replicates to " << cfg.out_dir << "\n";
  } else {
    std::cout << summary_csv_header();
    for (const ReplicateSummary& s : result.summaries) std::cout << summary_csv_row(s);
  }
  return 0;
}

int run_sweep_cmd(const Flags& f) {
  ExperimentConfig cfg = build_config(f);
  require_master_seed(cfg);
  if (!f.mu_grid) throw ConfigError("--mu-grid a:b:step is required for sweep");
  const std::vector<double> grid = parse_mu_grid(*f.mu_grid);
  const bool write_files = !cfg.out_dir.empty();
  const std::vector<SweepRow> rows = run_sweep(cfg, grid, write_files);
  if (write_files) {
    std::cout << "wrote " << rows.size() << " sweep points to " << cfg.out_dir << "/sweep.csv\n";
  } else {
    std::cout << sweep_csv_header();
    for (const SweepRow& row : rows) std::cout << sweep_csv_row(row);
  }
  return 0;
}

int run_render(const Flags& f, const std::string& input, const std::string& style_name,
               const std::optional<std::string>& svg_out) {
  RegionSpec region;
  if (!f.box.empty()) {
    region.width = f.box[0];
    region.height = f.box[1];
  }
  if (f.torus) region.boundary = Boundary::torus;
  const double radius = f.radius.value_or(1.0);
  if (!(radius > 0.0)) throw ConfigError("radius must be positive");

  const std::vector<NodeRow> rows = read_ensemble_csv(input);
  const RenderStyle style = parse_render_style(style_name);
  const int arrow_node = f.seed_node ? static_cast<int>(*f.seed_node) : -1;
  const std::string svg = render_svg(rows, region, radius, style, arrow_node);
  if (svg_out) {
    write_text_file(*svg_out, svg);
    std::cout << "wrote " << *svg_out << "\n";
  } else {
    std::cout << svg;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Continuous-state cascading failure on random geometric graphs:\n"
      "analytic condition evaluation and seeded Monte Carlo simulation."};
  app.require_subcommand(1);

  Flags analyze_flags;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "evaluate the analytic conditions and write report files");
  add_common_flags(analyze_cmd, analyze_flags);

  Flags simulate_flags;
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "run seeded cascade replicates and write CSV artifacts");
  add_common_flags(simulate_cmd, simulate_flags);
  add_sim_flags(simulate_cmd, simulate_flags);

  Flags sweep_flags;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "replicate batches across a grid of threshold rates");
  add_common_flags(sweep_cmd, sweep_flags);
  add_sim_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--mu-grid", sweep_flags.mu_grid, "threshold rate grid a:b:step");

  Flags render_flags;
  std::string render_in;
  std::string render_style = "class";
  std::optional<std::string> render_out;
  CLI::App* render_cmd = app.add_subcommand("render", "draw a node CSV as a static SVG");
  render_cmd->add_option("--in", render_in, "node CSV produced by simulate")->required();
  render_cmd->add_option("--style", render_style,
                         "solid-node predicate: class, reliability, failed, functional");
  render_cmd->add_option("--out", render_out, "output SVG path (stdout when omitted)");
  render_cmd->add_option("--box", render_flags.box, "region size: width height")->expected(2);
  render_cmd->add_flag("--torus", render_flags.torus, "periodic boundaries");
  render_cmd->add_option("--radius", render_flags.radius, "connection radius");
  render_cmd->add_option("--seed-node", render_flags.seed_node, "node id for the arrow marker");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_flags);
    if (*simulate_cmd) return run_simulate(simulate_flags);
    if (*sweep_cmd) return run_sweep_cmd(sweep_flags);
    if (*render_cmd) return run_render(render_flags, render_in, render_style, render_out);
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
