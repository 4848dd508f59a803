#pragma once

#include <string>
#include <vector>

#include "geocascade/cascade.hpp"
#include "geocascade/rgg.hpp"

namespace geocascade {

// Fixed formatting so emitted artifacts are byte-stable across runs and
// platforms: coordinates/states with 6 decimals, analysis values in
// full-precision scientific notation.
std::string format_fixed6(double v);
std::string format_sci(double v);

void write_text_file(const std::string& path, const std::string& content);

// id,x,y with 6-decimal coordinates, one row per node, "\n" endings.
std::string points_csv(const SpatialGraph& graph);
void write_points_csv(const std::string& path, const SpatialGraph& graph);

// id,x,y,state,threshold,class,failed — state is the initially drawn one (the
// post-cascade value of a failed node is 0 by definition, so the drawn value
// plus the failed flag carries strictly more information), class is the
// resolved label (HV/HR/W), failed is 0/1.
std::string ensemble_csv(const SpatialGraph& graph, const NodeEnsemble& ensemble);
void write_ensemble_csv(const std::string& path, const SpatialGraph& graph,
                        const NodeEnsemble& ensemble);

// Round-trip row for rendering previously written runs.
struct NodeRow {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double state = 0.0;
  double threshold = 0.0;
  std::string cls;
  bool failed = false;
};

// Parses an ensemble CSV; malformed input raises ConfigError naming the
// offending 1-based row.
std::vector<NodeRow> read_ensemble_csv(const std::string& path);

}  // namespace geocascade
