#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "geocascade/errors.hpp"
#include "geocascade/experiment.hpp"
#include "geocascade/io.hpp"
#include "geocascade/svg.hpp"
#include "json.hpp"

using namespace geocascade;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

ExperimentConfig small_config(std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.region.width = 10.0;
  cfg.region.height = 10.0;
  cfg.use_fixed_count = true;
  cfg.fixed_count = 150;
  cfg.threshold_dist = DistributionSpec::exponential(0.3);
  cfg.master_seed = seed;
  cfg.master_seed_set = true;
  return cfg;
}

}  // namespace

TEST_CASE("json config covers every recognized key") {
  ExperimentConfig cfg;
  apply_json_config(cfg, R"({
    "width": 12.5, "height": 8.0, "torus": true, "radius": 0.9,
    "lambda": 3.0, "lambda1": 2.5, "mu": 0.4, "gc_threshold": 0.2,
    "replicates": 7, "master_seed": 42, "out": "somewhere",
    "k_max": 6, "quad_tol": 1e-9, "series_tol": 1e-11,
    "state_dist": "uniform", "threshold_dist": "exponential",
    "seed_policy": "inside_hv_giant"
  })");
  CHECK(cfg.region.width == 12.5);
  CHECK(cfg.region.height == 8.0);
  CHECK(cfg.region.boundary == Boundary::torus);
  CHECK(cfg.radius == 0.9);
  CHECK(cfg.lambda == 3.0);
  CHECK(cfg.lambda1 == 2.5);
  CHECK(cfg.threshold_dist.kind == DistKind::exponential);
  CHECK(cfg.threshold_dist.mu == 0.4);
  CHECK(cfg.gc_threshold == 0.2);
  CHECK(cfg.replicates == 7);
  CHECK(cfg.master_seed == 42);
  CHECK(cfg.master_seed_set);
  CHECK(cfg.out_dir == "somewhere");
  CHECK(cfg.k_max == 6);
  CHECK(cfg.quad_tol == 1e-9);
  CHECK(cfg.series_tol == 1e-11);
  CHECK(cfg.seed_policy.kind == SeedPolicy::Kind::inside_hv_giant);
  CHECK(!cfg.use_fixed_count);
  CHECK_NOTHROW(cfg.validate());

  ExperimentConfig fixed;
  apply_json_config(fixed, R"({"n": 250, "seed_node": 3, "master_seed": 1})");
  CHECK(fixed.use_fixed_count);
  CHECK(fixed.fixed_count == 250);
  CHECK(fixed.seed_policy.kind == SeedPolicy::Kind::node_id);
  CHECK(fixed.seed_policy.node == 3);

  ExperimentConfig near;
  apply_json_config(near, R"({"seed_x": 4.5, "seed_y": 2.0, "master_seed": 1})");
  CHECK(near.seed_policy.kind == SeedPolicy::Kind::nearest);
  CHECK(near.seed_policy.x == 4.5);
  CHECK(near.seed_policy.y == 2.0);
}

TEST_CASE("json config rejects unknown keys, bad types and bad values") {
  ExperimentConfig cfg;
  CHECK_THROWS_WITH_AS(apply_json_config(cfg, R"({"bogus": 1})"),
                       doctest::Contains("bogus"), ConfigError);
  CHECK_THROWS_WITH_AS(apply_json_config(cfg, R"({"lambda": "four"})"),
                       doctest::Contains("lambda"), ConfigError);
  CHECK_THROWS_WITH_AS(apply_json_config(cfg, R"({"replicates": 2.5})"),
                       doctest::Contains("replicates"), ConfigError);
  CHECK_THROWS_WITH_AS(apply_json_config(cfg, R"({"torus": "yes"})"),
                       doctest::Contains("torus"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, R"({"mu": -1})"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, R"({"n": -5})"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, R"({"master_seed": -1})"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, R"({"state_dist": "exponential"})"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, R"({"threshold_dist": "uniform"})"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, R"({"seed_policy": "middle"})"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, R"({"seed_x": 1.0})"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, "not json"), ConfigError);
  CHECK_THROWS_AS(apply_json_config(cfg, "[1,2]"), ConfigError);
}

TEST_CASE("config validation names the offending field") {
  ExperimentConfig cfg = small_config(1);
  CHECK_NOTHROW(cfg.validate());

  ExperimentConfig unseeded = cfg;
  unseeded.master_seed_set = false;
  CHECK_THROWS_WITH_AS(unseeded.validate(), doctest::Contains("seed"), ConfigError);

  ExperimentConfig bad = cfg;
  bad.gc_threshold = 1.5;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("gc_threshold"), ConfigError);

  bad = cfg;
  bad.replicates = 0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("replicates"), ConfigError);

  bad = cfg;
  bad.radius = 0.0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("radius"), ConfigError);

  bad = cfg;
  bad.region.width = -2.0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("width"), ConfigError);

  bad = cfg;
  bad.use_fixed_count = false;
  bad.lambda = 0.0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("lambda"), ConfigError);

  bad = cfg;
  bad.lambda1 = 5.0;  // above lambda = 4
  bad.use_fixed_count = false;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("lambda1"), ConfigError);

  bad = cfg;
  bad.k_max = 0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("k_max"), ConfigError);

  bad = cfg;
  bad.quad_tol = 0.0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("quad_tol"), ConfigError);
}

TEST_CASE("mu grid parsing") {
  const std::vector<double> grid = parse_mu_grid("0.05:0.2:0.05");
  REQUIRE(grid.size() == 4);
  CHECK(grid[0] == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(grid[1] == doctest::Approx(0.10).epsilon(1e-14));
  CHECK(grid[2] == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(grid[3] == 0.2);  // end point clamped exactly despite fp drift

  CHECK(parse_mu_grid("5:5:1") == std::vector<double>{5.0});
  CHECK(parse_mu_grid("1:2:10") == std::vector<double>{1.0});

  CHECK_THROWS_AS(parse_mu_grid("1:2"), ConfigError);
  CHECK_THROWS_AS(parse_mu_grid("a:b:c"), ConfigError);
  CHECK_THROWS_AS(parse_mu_grid("1:0.5:0.1"), ConfigError);
  CHECK_THROWS_AS(parse_mu_grid("-1:2:1"), ConfigError);
  CHECK_THROWS_AS(parse_mu_grid("1:2:0"), ConfigError);
  CHECK_THROWS_AS(parse_mu_grid(""), ConfigError);
  CHECK_THROWS_AS(parse_mu_grid("1e-9:1000:1e-9"), ConfigError);  // > 1e6 points
}

TEST_CASE("replicates are deterministic in (seed, grid, index)") {
  const ExperimentConfig cfg = small_config(777);

  const ReplicateOutcome a = run_replicate(cfg, 0, 5);
  const ReplicateOutcome b = run_replicate(cfg, 0, 5);
  CHECK(a.ensemble.initial_state == b.ensemble.initial_state);
  CHECK(a.ensemble.threshold == b.ensemble.threshold);
  CHECK(a.cascade.failed_ids == b.cascade.failed_ids);
  CHECK(a.summary.seed_node == b.summary.seed_node);
  CHECK(a.summary.failed_count == b.summary.failed_count);
  CHECK(a.summary.hv_largest_fraction == b.summary.hv_largest_fraction);
  CHECK(summary_csv_row(a.summary) == summary_csv_row(b.summary));

  const ReplicateOutcome other_rep = run_replicate(cfg, 0, 6);
  CHECK(a.ensemble.initial_state != other_rep.ensemble.initial_state);
  const ReplicateOutcome other_grid = run_replicate(cfg, 1, 5);
  CHECK(a.ensemble.initial_state != other_grid.ensemble.initial_state);

  // Internal consistency of the summary row.
  CHECK(a.summary.n == a.graph.node_count());
  CHECK(a.summary.hv_count == static_cast<long long>(a.ensemble.hv_subset().size()));
  CHECK(a.summary.weak_count == static_cast<long long>(a.ensemble.weak_subset().size()));
  CHECK(a.summary.failed_count == static_cast<long long>(a.ensemble.failed_subset().size()));
  CHECK(a.summary.rounds == static_cast<long long>(a.cascade.rounds.size()));
  CHECK(a.summary.seed_status == "ok");
  CHECK(a.summary.seed_node >= 0);
  CHECK(a.summary.seed_node < a.summary.n);
}

TEST_CASE("simulation runs write stable files") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = small_config(99);
  cfg.fixed_count = 60;
  cfg.region.width = 8.0;
  cfg.region.height = 8.0;
  cfg.replicates = 3;
  cfg.out_dir = "test_artifacts/sim_stable";
  fs::remove_all(cfg.out_dir);

  const SimulationResult first = run_simulation(cfg, true);
  REQUIRE(first.summaries.size() == 3);
  const std::string nodes0 = slurp(cfg.out_dir + "/nodes_0000.csv");
  const std::string nodes2 = slurp(cfg.out_dir + "/nodes_0002.csv");
  const std::string summary = slurp(cfg.out_dir + "/summary.csv");
  const std::string config_echo = slurp(cfg.out_dir + "/run_config.json");

  // Re-running the identical config reproduces every artifact byte for byte.
  run_simulation(cfg, true);
  CHECK(slurp(cfg.out_dir + "/nodes_0000.csv") == nodes0);
  CHECK(slurp(cfg.out_dir + "/nodes_0002.csv") == nodes2);
  CHECK(slurp(cfg.out_dir + "/summary.csv") == summary);
  CHECK(slurp(cfg.out_dir + "/run_config.json") == config_echo);

  // summary.csv: header plus one row per replicate.
  CHECK(summary.rfind(summary_csv_header(), 0) == 0);
  CHECK(count_occurrences(summary, "\n") == 4);

  // The node files parse back and agree with the recorded replicate size.
  const std::vector<NodeRow> rows = read_ensemble_csv(cfg.out_dir + "/nodes_0000.csv");
  CHECK(static_cast<long long>(rows.size()) == first.summaries[0].n);

  // The config echo holds the seed and replays into an equivalent config.
  const nlohmann::json echo = nlohmann::json::parse(config_echo);
  CHECK(echo.at("master_seed").get<std::uint64_t>() == 99);
  ExperimentConfig replay;
  apply_json_config(replay, config_echo);
  CHECK(replay.fixed_count == cfg.fixed_count);
  CHECK(replay.replicates == cfg.replicates);
  CHECK(replay.region.width == cfg.region.width);
  CHECK(replay.threshold_dist.mu == cfg.threshold_dist.mu);
  CHECK(replay.master_seed == cfg.master_seed);
  CHECK(replay.out_dir == cfg.out_dir);
}

TEST_CASE("a single-point sweep equals the simulation it aggregates") {
  ExperimentConfig cfg = small_config(1234);
  cfg.fixed_count = 120;
  cfg.region.width = 8.0;
  cfg.region.height = 8.0;
  cfg.replicates = 8;

  const std::vector<SweepRow> rows = run_sweep(cfg, {0.5}, false);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].mu == 0.5);
  CHECK(rows[0].replicates == 8);

  cfg.threshold_dist = DistributionSpec::exponential(0.5);
  const SimulationResult sim = run_simulation(cfg, false);
  REQUIRE(sim.summaries.size() == 8);

  double hv_sum = 0.0, weak_sum = 0.0, fail_sum = 0.0;
  double hv_gc = 0.0, weak_gc = 0.0, cascade = 0.0;
  for (const ReplicateSummary& s : sim.summaries) {
    hv_sum += s.hv_largest_fraction;
    weak_sum += s.weak_largest_fraction;
    fail_sum += static_cast<double>(s.failed_count) / static_cast<double>(s.n);
    hv_gc += s.hv_gc ? 1.0 : 0.0;
    weak_gc += s.weak_gc ? 1.0 : 0.0;
    cascade += s.cascade ? 1.0 : 0.0;
  }
  CHECK(rows[0].hv_fraction_mean == doctest::Approx(hv_sum / 8.0).epsilon(1e-12));
  CHECK(rows[0].weak_fraction_mean == doctest::Approx(weak_sum / 8.0).epsilon(1e-12));
  CHECK(rows[0].failed_fraction_mean == doctest::Approx(fail_sum / 8.0).epsilon(1e-12));
  CHECK(rows[0].hv_gc_rate == doctest::Approx(hv_gc / 8.0).epsilon(1e-12));
  CHECK(rows[0].weak_gc_rate == doctest::Approx(weak_gc / 8.0).epsilon(1e-12));
  CHECK(rows[0].cascade_rate == doctest::Approx(cascade / 8.0).epsilon(1e-12));

  double ss = 0.0;
  for (const ReplicateSummary& s : sim.summaries) {
    const double d = static_cast<double>(s.failed_count) / static_cast<double>(s.n) -
                     fail_sum / 8.0;
    ss += d * d;
  }
  CHECK(rows[0].failed_fraction_stderr ==
        doctest::Approx(std::sqrt(ss / 7.0 / 8.0)).epsilon(1e-10));
}

TEST_CASE("sweep statistics move the right way with the threshold rate") {
  ExperimentConfig cfg = small_config(4242);
  cfg.fixed_count = 1200;
  cfg.region.width = 20.0;
  cfg.region.height = 20.0;
  cfg.region.boundary = Boundary::torus;
  cfg.replicates = 12;

  // Low rates mean heavy thresholds: a giant vulnerable cluster and a large
  // cascade. At a moderate rate both effects collapse.
  const std::vector<SweepRow> vul = run_sweep(cfg, {0.05, 0.4}, false);
  REQUIRE(vul.size() == 2);
  CHECK(vul[0].hv_gc_rate > vul[1].hv_gc_rate);
  CHECK(vul[0].failed_fraction_mean > vul[1].failed_fraction_mean);
  CHECK(vul[0].cascade_rate >= vul[1].cascade_rate);

  // Weak (non-reliable) nodes thin out as the rate grows: at 5 they keep a
  // giant cluster, at 2000 almost every node is highly reliable.
  ExperimentConfig dense = small_config(4243);
  dense.fixed_count = 1600;
  dense.region.width = 20.0;
  dense.region.height = 20.0;
  dense.region.boundary = Boundary::torus;
  dense.replicates = 12;
  const std::vector<SweepRow> weak = run_sweep(dense, {5.0, 2000.0}, false);
  REQUIRE(weak.size() == 2);
  CHECK(weak[0].weak_gc_rate > weak[1].weak_gc_rate);
  CHECK(weak[0].weak_fraction_mean > weak[1].weak_fraction_mean);

  CHECK_THROWS_AS(run_sweep(cfg, {}, false), ConfigError);
  CHECK_THROWS_AS(run_sweep(cfg, {0.4, 0.05}, false), ConfigError);
  CHECK_THROWS_AS(run_sweep(cfg, {0.0, 0.1}, false), ConfigError);
}

TEST_CASE("a failing seed policy is recorded and the run continues") {
  ExperimentConfig cfg = small_config(31337);
  cfg.fixed_count = 25;
  cfg.region.width = 6.0;
  cfg.region.height = 6.0;
  // Thresholds of scale 1e-9 leave no highly vulnerable nodes to seed in.
  cfg.threshold_dist = DistributionSpec::exponential(1e9);
  cfg.seed_policy = SeedPolicy::inside_hv_giant();

  const ReplicateOutcome out = run_replicate(cfg, 0, 0);
  CHECK(out.summary.seed_status != "ok");
  CHECK(out.summary.seed_node == -1);
  CHECK(out.summary.failed_count == 0);
  CHECK(!out.summary.cascade);
  CHECK(out.summary.rounds == 0);
  CHECK(out.cascade.seed_ids.empty());

  cfg.replicates = 2;
  const SimulationResult sim = run_simulation(cfg, false);
  REQUIRE(sim.summaries.size() == 2);
  for (const ReplicateSummary& s : sim.summaries) CHECK(s.seed_status != "ok");
  // The failure text must not corrupt the CSV shape.
  const std::string row = summary_csv_row(sim.summaries[0]);
  CHECK(count_occurrences(row, ",") == count_occurrences(summary_csv_header(), ","));
}

TEST_CASE("ensemble csv round trip") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = small_config(2024);
  cfg.fixed_count = 40;
  const ReplicateOutcome out = run_replicate(cfg, 0, 0);

  fs::create_directories("test_artifacts");
  const std::string path = "test_artifacts/roundtrip.csv";
  write_ensemble_csv(path, out.graph, out.ensemble);

  const std::vector<NodeRow> rows = read_ensemble_csv(path);
  REQUIRE(rows.size() == static_cast<std::size_t>(out.graph.node_count()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].id == static_cast<int>(i));
    CHECK(rows[i].x == doctest::Approx(out.graph.points[i].x).epsilon(5e-6));
    CHECK(rows[i].y == doctest::Approx(out.graph.points[i].y).epsilon(5e-6));
    CHECK(std::abs(rows[i].state - out.ensemble.initial_state[i]) <= 5e-7);
    CHECK(std::abs(rows[i].threshold - out.ensemble.threshold[i]) <= 5e-7);
    CHECK(rows[i].cls == class_code(out.ensemble.label[i]));
    CHECK(rows[i].failed == (out.ensemble.failed[i] != 0));
  }
}

TEST_CASE("malformed ensemble csv names the bad row") {
  namespace fs = std::filesystem;
  fs::create_directories("test_artifacts");

  const std::string header = "id,x,y,state,threshold,class,failed\n";
  write_text_file("test_artifacts/bad_fields.csv", header + "0,1,2\n");
  CHECK_THROWS_WITH_AS(read_ensemble_csv("test_artifacts/bad_fields.csv"),
                       doctest::Contains("row 2"), ConfigError);

  write_text_file("test_artifacts/bad_class.csv",
                  header + "0,1.0,1.0,0.5,0.5,XX,0\n");
  CHECK_THROWS_WITH_AS(read_ensemble_csv("test_artifacts/bad_class.csv"),
                       doctest::Contains("class"), ConfigError);

  write_text_file("test_artifacts/bad_flag.csv",
                  header + "0,1.0,1.0,0.5,0.5,HV,2\n");
  CHECK_THROWS_AS(read_ensemble_csv("test_artifacts/bad_flag.csv"), ConfigError);

  write_text_file("test_artifacts/bad_number.csv",
                  header + "0,1.0,oops,0.5,0.5,HV,0\n");
  CHECK_THROWS_WITH_AS(read_ensemble_csv("test_artifacts/bad_number.csv"),
                       doctest::Contains("row 2"), ConfigError);

  write_text_file("test_artifacts/bad_header.csv", "wrong,header\n");
  CHECK_THROWS_WITH_AS(read_ensemble_csv("test_artifacts/bad_header.csv"),
                       doctest::Contains("row 1"), ConfigError);

  CHECK_THROWS_AS(read_ensemble_csv("test_artifacts/does_not_exist.csv"), ConfigError);
}

TEST_CASE("svg rendering") {
  RegionSpec region;
  region.width = 8.0;
  region.height = 8.0;

  std::vector<NodeRow> rows(3);
  rows[0] = {0, 1.0, 1.0, 0.6, 2.0, "HV", false};
  rows[1] = {1, 1.5, 1.0, 0.3, 0.1, "W", true};
  rows[2] = {2, 5.0, 5.0, 0.8, 0.0, "HR", false};

  const std::string by_class = render_svg(rows, region, 1.0, RenderStyle::class_label);
  CHECK(by_class == render_svg(rows, region, 1.0, RenderStyle::class_label));
  CHECK(count_occurrences(by_class, "node solid") == 1);
  CHECK(count_occurrences(by_class, "node hollow") == 2);
  // Exactly one pair sits within the radius; no seed marker is drawn.
  CHECK(count_occurrences(by_class, "<line x1=") == 1);
  CHECK(count_occurrences(by_class, "marker-end") == 0);

  CHECK(count_occurrences(render_svg(rows, region, 1.0, RenderStyle::reliability),
                          "node solid") == 1);
  CHECK(count_occurrences(render_svg(rows, region, 1.0, RenderStyle::failed),
                          "node solid") == 1);
  CHECK(count_occurrences(render_svg(rows, region, 1.0, RenderStyle::functional),
                          "node solid") == 2);

  const std::string with_seed = render_svg(rows, region, 1.0, RenderStyle::class_label, 1);
  CHECK(count_occurrences(with_seed, "marker-end") == 1);
  CHECK_THROWS_AS(render_svg(rows, region, 1.0, RenderStyle::class_label, 7),
                  ConfigError);

  // A wrapped torus edge must not be drawn across the whole canvas.
  RegionSpec torus = region;
  torus.boundary = Boundary::torus;
  std::vector<NodeRow> wrap(2);
  wrap[0] = {0, 0.2, 4.0, 0.5, 1.0, "W", false};
  wrap[1] = {1, 7.8, 4.0, 0.5, 1.0, "W", false};
  const std::string wrapped = render_svg(wrap, torus, 1.0, RenderStyle::class_label);
  CHECK(count_occurrences(wrapped, "<line x1=") == 0);

  const std::string empty = render_svg({}, region, 1.0, RenderStyle::class_label);
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(empty.find("</svg>") != std::string::npos);

  CHECK(parse_render_style("class") == RenderStyle::class_label);
  CHECK(parse_render_style("reliability") == RenderStyle::reliability);
  CHECK(parse_render_style("failed") == RenderStyle::failed);
  CHECK(parse_render_style("functional") == RenderStyle::functional);
  CHECK_THROWS_AS(parse_render_style("colors"), ConfigError);
}

TEST_CASE("analysis serialization") {
  const AnalysisReport rep = build_analysis_report(
      DistributionSpec::uniform_unit(), DistributionSpec::exponential(0.075), 4.0, 3.85, 3);

  const std::string csv = analysis_csv(rep);
  CHECK(csv.rfind("quantity,k,value,error_bound\n", 0) == 0);
  CHECK(csv.find("vulnerability_prob,1,") != std::string::npos);
  CHECK(csv.find("reliability_prob,3,") != std::string::npos);
  CHECK(csv.find("degree_condition_ratio,,") != std::string::npos);
  CHECK(csv.find("weak_series_value,,") != std::string::npos);
  CHECK(csv.find("rate_bound,,") != std::string::npos);
  CHECK(csv.find("critical_rate,,") != std::string::npos);

  const std::string text = analysis_text(rep);
  CHECK(text.find("giant highly-vulnerable component is predicted") != std::string::npos);
  CHECK(!rep.degree_condition.caveat.empty());
  CHECK(text.find(rep.degree_condition.caveat) != std::string::npos);

  namespace fs = std::filesystem;
  fs::remove_all("test_artifacts/analysis_out");
  write_analysis_files("test_artifacts/analysis_out", rep);
  CHECK(slurp("test_artifacts/analysis_out/analysis.csv") == csv);
  CHECK(slurp("test_artifacts/analysis_out/analysis.txt") == text);
}
