#include "geocascade/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace geocascade {
namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;

  explicit UnionFind(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];  // path compression (halving)
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

std::vector<int> normalized_subset(const SpatialGraph& graph, const std::vector<int>& subset) {
  std::vector<int> ids = subset;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && (ids.front() < 0 || ids.back() >= graph.node_count()))
    throw std::invalid_argument("subset id out of range");
  return ids;
}

UnionFind subset_union_find(const SpatialGraph& graph, const std::vector<int>& ids) {
  std::vector<int> index_of(graph.node_count(), -1);
  for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos) index_of[ids[pos]] = pos;
  UnionFind uf(static_cast<int>(ids.size()));
  for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos) {
    const int i = ids[pos];
    for (const int j : graph.adjacency[i]) {
      if (j > i && index_of[j] >= 0) uf.unite(pos, index_of[j]);
    }
  }
  return uf;
}

}  // namespace

ComponentReport components(const SpatialGraph& graph, const std::vector<int>& subset) {
  const std::vector<int> ids = normalized_subset(graph, subset);
  ComponentReport report;
  report.subset_size = static_cast<long long>(ids.size());
  if (ids.empty()) return report;

  UnionFind uf = subset_union_find(graph, ids);
  std::vector<long long> tally(ids.size(), 0);
  for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos) ++tally[uf.find(pos)];
  for (const long long t : tally)
    if (t > 0) report.component_sizes.push_back(t);
  std::sort(report.component_sizes.begin(), report.component_sizes.end(),
            std::greater<long long>());
  report.largest_fraction = static_cast<double>(report.component_sizes.front()) /
                            static_cast<double>(report.subset_size);
  return report;
}

bool gc_present(const ComponentReport& report, double threshold_fraction) {
  if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0))
    throw std::invalid_argument("gc threshold_fraction must be in (0,1)");
  return report.subset_size >= 10 && report.largest_fraction >= threshold_fraction;
}

bool gc_present_at_network_scale(const ComponentReport& report, double threshold_fraction,
                                 long long total_nodes) {
  if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0))
    throw std::invalid_argument("gc threshold_fraction must be in (0,1)");
  if (total_nodes <= 0) throw std::invalid_argument("total_nodes must be positive");
  if (report.component_sizes.empty()) return false;
  const double largest = static_cast<double>(report.component_sizes.front());
  return report.subset_size >= 10 &&
         largest >= threshold_fraction * static_cast<double>(total_nodes);
}

std::vector<int> largest_component_members(const SpatialGraph& graph,
                                           const std::vector<int>& subset) {
  const std::vector<int> ids = normalized_subset(graph, subset);
  if (ids.empty()) return {};

  UnionFind uf = subset_union_find(graph, ids);
  std::vector<long long> tally(ids.size(), 0);
  for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos) ++tally[uf.find(pos)];
  // Ascending position scan: on ties the component holding the lowest id wins.
  int best_root = -1;
  for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos) {
    const int root = uf.find(pos);
    if (best_root < 0 || tally[root] > tally[best_root]) best_root = root;
  }
  std::vector<int> members;
  for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos)
    if (uf.find(pos) == best_root) members.push_back(ids[pos]);
  return members;
}

}  // namespace geocascade
