#pragma once

#include <vector>

#include "geocascade/rgg.hpp"

namespace geocascade {

struct ComponentReport {
  std::vector<long long> component_sizes;  // descending
  double largest_fraction = 0.0;           // largest size / subset size; 0 when empty
  long long subset_size = 0;               // node count analyzed (after dedupe)
  bool gc_flag = false;                    // filled by callers with threshold context
};

// Connected components of the subgraph induced by `subset`, via union-find
// with path compression. Ids are deduplicated; out-of-range ids throw.
ComponentReport components(const SpatialGraph& graph, const std::vector<int>& subset);

// Subset-relative cutoff: the largest component covers at least
// threshold_fraction of the analyzed subset and the subset is non-trivial
// (>= 10 nodes). Throws std::invalid_argument unless threshold is in (0,1).
bool gc_present(const ComponentReport& report, double threshold_fraction);

// Network-scale dichotomy: a subset's largest component only counts as giant
// when it reaches threshold_fraction of the *whole* node set. A 15-node
// subset whose members clump passes the subset-relative cutoff while being
// nowhere near a macroscopic component; replicate summary flags use this
// test (it implies the subset-relative one, since subsets are never larger
// than the graph).
bool gc_present_at_network_scale(const ComponentReport& report, double threshold_fraction,
                                 long long total_nodes);

// Members of the largest component of the induced subgraph, ascending; ties
// on size break toward the component containing the lowest id. Empty subset
// gives an empty list.
std::vector<int> largest_component_members(const SpatialGraph& graph,
                                           const std::vector<int>& subset);

}  // namespace geocascade
