#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geocascade/analysis.hpp"
#include "geocascade/cascade.hpp"
#include "geocascade/errors.hpp"
#include "geocascade/percolation.hpp"
#include "geocascade/rgg.hpp"

namespace geocascade {

struct ExperimentConfig {
  RegionSpec region;  // 20 x 20 box by default
  bool use_fixed_count = false;
  long long fixed_count = 0;
  double lambda = 4.0;
  double lambda1 = 0.0;  // 0 means "not supplied"
  double radius = 1.0;
  DistributionSpec state_dist = DistributionSpec::uniform_unit();
  DistributionSpec threshold_dist = DistributionSpec::exponential(1.0);
  SeedPolicy seed_policy;  // uniform random by default
  double gc_threshold = 0.1;
  long long replicates = 1;
  std::uint64_t master_seed = 0;
  bool master_seed_set = false;  // a silent default seed is forbidden
  int k_max = 10;
  double quad_tol = 1e-10;
  double series_tol = 1e-12;
  std::string out_dir;

  PointProcessSpec point_process() const;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

// Applies a flat-key JSON document onto cfg. Recognized keys: width, height,
// torus, radius, lambda, lambda1, mu, n, state_dist, threshold_dist,
// seed_policy, seed_node, seed_x, seed_y, gc_threshold, replicates,
// master_seed, out, k_max, quad_tol, series_tol. Unknown keys and wrong
// types raise ConfigError naming the key.
void apply_json_config(ExperimentConfig& cfg, const std::string& json_text);

// Canonical flat-key JSON echo of a config (keys sorted, 2-space indent,
// trailing newline); embeds the master seed so a run can be replayed.
std::string run_config_json(const ExperimentConfig& cfg);

struct ReplicateSummary {
  long long replicate = 0;
  long long n = 0;
  long long seed_node = -1;        // -1 when the seed policy failed
  std::string seed_status = "ok";  // "ok" or the failure reason
  long long hv_count = 0;
  long long weak_count = 0;
  long long failed_count = 0;
  double hv_largest_fraction = 0.0;  // largest component / subset size
  double weak_largest_fraction = 0.0;
  double failed_largest_fraction = 0.0;
  bool hv_gc = false;  // network-scale giant-component tests
  bool weak_gc = false;
  bool cascade = false;  // failed set forms a network-scale giant component
  long long rounds = 0;
};

struct ReplicateOutcome {
  SpatialGraph graph;
  NodeEnsemble ensemble;
  CascadeResult cascade;
  ReplicateSummary summary;
};

// One full replicate: sample positions, build the graph, draw attributes,
// classify, pick the seed, run the cascade, and analyze the HV / weak /
// failed subsets. Every random draw comes from a stream derived from
// (master_seed, grid_index, replicate_index, purpose), so replicates are
// order-independent. A seed-policy failure is recorded in seed_status and
// the replicate completes without a cascade.
ReplicateOutcome run_replicate(const ExperimentConfig& cfg, std::uint64_t grid_index,
                               long long replicate_index);

std::string summary_csv_header();
std::string summary_csv_row(const ReplicateSummary& s);

struct SimulationResult {
  std::vector<ReplicateSummary> summaries;
};

// Runs cfg.replicates replicates at grid index 0. With write_files, emits
// per-replicate nodes_NNNN.csv, summary.csv and run_config.json into
// cfg.out_dir.
SimulationResult run_simulation(const ExperimentConfig& cfg, bool write_files);

struct SweepRow {
  double mu = 0.0;
  long long replicates = 0;
  double hv_fraction_mean = 0.0;  // subset-relative largest-component fraction
  double hv_fraction_stderr = 0.0;
  double weak_fraction_mean = 0.0;
  double weak_fraction_stderr = 0.0;
  double failed_fraction_mean = 0.0;  // failed nodes / n
  double failed_fraction_stderr = 0.0;
  double hv_gc_rate = 0.0;
  double weak_gc_rate = 0.0;
  double cascade_rate = 0.0;
};

// "a:b:step" inclusive of both ends (within a small step-relative guard);
// requires step > 0 and b >= a. Malformed input raises ConfigError.
std::vector<double> parse_mu_grid(const std::string& text);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);

// One sweep point per mu value (ascending required): replicates at grid
// index g share everything with cfg except the threshold rate. With
// write_files, emits sweep.csv and run_config.json into cfg.out_dir.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, const std::vector<double>& mu_values,
                                bool write_files);

std::string analysis_csv(const AnalysisReport& report);
std::string analysis_text(const AnalysisReport& report);

// Writes analysis.csv and analysis.txt into out_dir.
void write_analysis_files(const std::string& out_dir, const AnalysisReport& report);

}  // namespace geocascade
