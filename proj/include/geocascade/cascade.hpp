#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geocascade/distributions.hpp"
#include "geocascade/rgg.hpp"

namespace geocascade {

// Raised when a seed policy cannot produce a seed (e.g. no highly vulnerable
// nodes exist). Experiment runners record it per replicate and continue.
struct SeedPolicyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Display label only. A node can satisfy both the highly-vulnerable and the
// highly-reliable definitions at once (degree 1 with a high-state neighbor
// and a small threshold does it with positive probability), so the exact
// per-definition hv/hr flags are stored separately and the single label
// resolves overlap with precedence HR > HV > W. That choice keeps
// {label != HR} identical to the weak set (nodes that are not highly
// reliable), which is the set the component analyses care about.
enum class NodeClass { highly_vulnerable, highly_reliable, weak_other };

const char* class_code(NodeClass c);  // "HV" / "HR" / "W"

struct NodeEnsemble {
  std::vector<double> initial_state;  // S' in (0,1], drawn once
  std::vector<double> threshold;      // phi >= 0
  std::vector<double> state;          // S: equals S' while functional, 0 when failed
  std::vector<std::uint8_t> hv;       // phi > degree - min neighbor S' (degree >= 1)
  std::vector<std::uint8_t> hr;       // phi <= min neighbor S', or degree == 0
  std::vector<NodeClass> label;
  std::vector<std::uint8_t> failed;

  int size() const { return static_cast<int>(initial_state.size()); }
  std::vector<int> hv_subset() const;      // ids with the hv flag
  std::vector<int> weak_subset() const;    // ids without the hr flag
  std::vector<int> failed_subset() const;  // ids currently failed
};

struct CascadeResult {
  std::vector<int> seed_ids;    // ascending, deduplicated
  std::vector<int> failed_ids;  // final failed set, ascending
  std::vector<long long> rounds;  // newly failed per synchronous round; seeds excluded

  long long total_failed() const { return static_cast<long long>(failed_ids.size()); }
};

// Draws S' and phi from the two independent streams (all states first within
// their stream, all thresholds within theirs), marks everything functional
// and classifies. Throws std::invalid_argument when the state distribution
// can produce values outside (0,1].
NodeEnsemble assign_attributes(const SpatialGraph& graph,
                               const DistributionSpec& state_dist,
                               const DistributionSpec& threshold_dist,
                               RandomStream& state_rng,
                               RandomStream& threshold_rng);

// Recomputes hv/hr/label from initial_state and threshold.
void classify(const SpatialGraph& graph, NodeEnsemble& ensemble);

// Seeds fail unconditionally (exogenous failure) and their states drop to
// zero immediately, before the first round's neighbor sums are taken. Then
// synchronous rounds: every functional node with at least one failed
// neighbor and current neighbor-state sum below its threshold fails; repeat
// until a round adds nothing. The rule is monotone, so the final set is the
// schedule-independent closure.
CascadeResult run_cascade(const SpatialGraph& graph, NodeEnsemble& ensemble,
                          const std::vector<int>& seed_ids);

struct SeedPolicy {
  enum class Kind { node_id, random, inside_hv_giant, nearest };
  Kind kind = Kind::random;
  int node = -1;             // node_id policy
  double x = 0.0, y = 0.0;   // nearest policy

  static SeedPolicy from_node(int id);
  static SeedPolicy uniform_random();
  static SeedPolicy inside_hv_giant();
  static SeedPolicy nearest(double x, double y);
  std::string describe() const;
};

// Resolves the policy to a single seed node. inside_hv_giant draws uniformly
// from the largest connected component of hv-flagged nodes and throws
// SeedPolicyError when that set is empty; nearest breaks distance ties by
// lowest id; random and nearest throw SeedPolicyError on an empty graph.
std::vector<int> pick_seed(const SpatialGraph& graph, const NodeEnsemble& ensemble,
                           const SeedPolicy& policy, RandomStream& rng);

}  // namespace geocascade
