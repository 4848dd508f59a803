#include "geocascade/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "geocascade/percolation.hpp"

namespace geocascade {

const char* class_code(NodeClass c) {
  switch (c) {
    case NodeClass::highly_vulnerable: return "HV";
    case NodeClass::highly_reliable: return "HR";
    case NodeClass::weak_other: return "W";
  }
  return "?";
}

namespace {

std::vector<int> flagged_ids(const std::vector<std::uint8_t>& flags, bool wanted) {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(flags.size()); ++i)
    if (static_cast<bool>(flags[i]) == wanted) ids.push_back(i);
  return ids;
}

}  // namespace

std::vector<int> NodeEnsemble::hv_subset() const { return flagged_ids(hv, true); }
std::vector<int> NodeEnsemble::weak_subset() const { return flagged_ids(hr, false); }
std::vector<int> NodeEnsemble::failed_subset() const { return flagged_ids(failed, true); }

NodeEnsemble assign_attributes(const SpatialGraph& graph,
                               const DistributionSpec& state_dist,
                               const DistributionSpec& threshold_dist,
                               RandomStream& state_rng,
                               RandomStream& threshold_rng) {
  if (!state_dist.support_within_unit_interval())
    throw std::invalid_argument("state distribution must be supported within (0,1], got " +
                                state_dist.describe());
  const int n = graph.node_count();
  NodeEnsemble e;
  e.initial_state.resize(n);
  e.threshold.resize(n);
  for (int i = 0; i < n; ++i) e.initial_state[i] = state_dist.sample(state_rng);
  for (int i = 0; i < n; ++i) e.threshold[i] = threshold_dist.sample(threshold_rng);
  e.state = e.initial_state;
  e.failed.assign(n, 0);
  classify(graph, e);
  return e;
}

void classify(const SpatialGraph& graph, NodeEnsemble& ensemble) {
  const int n = graph.node_count();
  if (ensemble.size() != n)
    throw std::invalid_argument("ensemble/graph size mismatch in classify");
  ensemble.hv.assign(n, 0);
  ensemble.hr.assign(n, 0);
  ensemble.label.assign(n, NodeClass::weak_other);
  for (int i = 0; i < n; ++i) {
    const auto& nbrs = graph.adjacency[i];
    const int k = static_cast<int>(nbrs.size());
    if (k == 0) {
      // No neighbor can ever fail next to it, so it behaves as reliable.
      ensemble.hr[i] = 1;
      ensemble.label[i] = NodeClass::highly_reliable;
      continue;
    }
    double min_state = std::numeric_limits<double>::infinity();
    for (const int j : nbrs) min_state = std::min(min_state, ensemble.initial_state[j]);
    const double phi = ensemble.threshold[i];
    ensemble.hv[i] = phi > static_cast<double>(k) - min_state ? 1 : 0;
    ensemble.hr[i] = phi <= min_state ? 1 : 0;
    ensemble.label[i] = ensemble.hr[i]   ? NodeClass::highly_reliable
                        : ensemble.hv[i] ? NodeClass::highly_vulnerable
                                         : NodeClass::weak_other;
  }
}

CascadeResult run_cascade(const SpatialGraph& graph, NodeEnsemble& ensemble,
                          const std::vector<int>& seed_ids) {
  const int n = graph.node_count();
  if (ensemble.size() != n)
    throw std::invalid_argument("ensemble/graph size mismatch in run_cascade");

  CascadeResult result;
  result.seed_ids = seed_ids;
  std::sort(result.seed_ids.begin(), result.seed_ids.end());
  result.seed_ids.erase(std::unique(result.seed_ids.begin(), result.seed_ids.end()),
                        result.seed_ids.end());
  for (const int s : result.seed_ids)
    if (s < 0 || s >= n) throw std::invalid_argument("seed id out of range");

  // Seed states drop to zero before the first round's sums are taken.
  for (const int s : result.seed_ids) {
    ensemble.failed[s] = 1;
    ensemble.state[s] = 0.0;
  }

  std::vector<double> neighbor_sum(n, 0.0);
  std::vector<std::uint8_t> has_failed_neighbor(n, 0);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const int j : graph.adjacency[i]) {
      sum += ensemble.state[j];
      if (ensemble.failed[j]) has_failed_neighbor[i] = 1;
    }
    neighbor_sum[i] = sum;
  }

  // Synchronous rounds: collect this round's failures against the state at
  // the start of the round, then apply them all at once.
  std::vector<int> newly;
  for (;;) {
    newly.clear();
    for (int i = 0; i < n; ++i) {
      if (ensemble.failed[i] || !has_failed_neighbor[i]) continue;
      if (neighbor_sum[i] < ensemble.threshold[i]) newly.push_back(i);
    }
    if (newly.empty()) break;
    for (const int i : newly) {
      ensemble.failed[i] = 1;
      ensemble.state[i] = 0.0;
    }
    for (const int i : newly) {
      for (const int j : graph.adjacency[i]) {
        neighbor_sum[j] -= ensemble.initial_state[i];
        has_failed_neighbor[j] = 1;
      }
    }
    result.rounds.push_back(static_cast<long long>(newly.size()));
  }

  result.failed_ids = ensemble.failed_subset();
  return result;
}

SeedPolicy SeedPolicy::from_node(int id) {
  SeedPolicy p;
  p.kind = Kind::node_id;
  p.node = id;
  return p;
}

SeedPolicy SeedPolicy::uniform_random() {
  SeedPolicy p;
  p.kind = Kind::random;
  return p;
}

SeedPolicy SeedPolicy::inside_hv_giant() {
  SeedPolicy p;
  p.kind = Kind::inside_hv_giant;
  return p;
}

SeedPolicy SeedPolicy::nearest(double x, double y) {
  SeedPolicy p;
  p.kind = Kind::nearest;
  p.x = x;
  p.y = y;
  return p;
}

std::string SeedPolicy::describe() const {
  switch (kind) {
    case Kind::node_id: return "node_id(" + std::to_string(node) + ")";
    case Kind::random: return "random";
    case Kind::inside_hv_giant: return "inside_hv_giant";
    case Kind::nearest:
      return "nearest(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return "?";
}

std::vector<int> pick_seed(const SpatialGraph& graph, const NodeEnsemble& ensemble,
                           const SeedPolicy& policy, RandomStream& rng) {
  const int n = graph.node_count();
  switch (policy.kind) {
    case SeedPolicy::Kind::node_id: {
      if (policy.node < 0 || policy.node >= n)
        throw SeedPolicyError("seed node id out of range: " + std::to_string(policy.node));
      return {policy.node};
    }
    case SeedPolicy::Kind::random: {
      if (n == 0) throw SeedPolicyError("random seed policy on an empty graph");
      return {static_cast<int>(rng.uniform_int(n))};
    }
    case SeedPolicy::Kind::nearest: {
      if (n == 0) throw SeedPolicyError("nearest seed policy on an empty graph");
      int best = 0;
      double best_d2 = graph.region.distance2(policy.x, policy.y, graph.points[0].x, graph.points[0].y);
      for (int i = 1; i < n; ++i) {
        const double d2 =
            graph.region.distance2(policy.x, policy.y, graph.points[i].x, graph.points[i].y);
        if (d2 < best_d2) {
          best = i;
          best_d2 = d2;
        }
      }
      return {best};
    }
    case SeedPolicy::Kind::inside_hv_giant: {
      const std::vector<int> members =
          largest_component_members(graph, ensemble.hv_subset());
      if (members.empty())
        throw SeedPolicyError("inside_hv_giant: no highly vulnerable nodes");
      return {members[rng.uniform_int(static_cast<long long>(members.size()))]};
    }
  }
  throw SeedPolicyError("unknown seed policy");
}

}  // namespace geocascade
