#pragma once

#include <string>
#include <vector>

#include "geocascade/io.hpp"
#include "geocascade/rgg.hpp"

namespace geocascade {

// Which nodes are drawn solid; everything else is hollow.
enum class RenderStyle {
  class_label,  // solid = highly vulnerable (HV)
  reliability,  // solid = highly reliable (HR)
  failed,       // solid = failed after the cascade
  functional,   // solid = still functional
};

// Accepts "class", "reliability", "failed", "functional"; ConfigError otherwise.
RenderStyle parse_render_style(const std::string& name);

// Static SVG: circles for nodes (solid per the style predicate, hollow
// otherwise), light segments for edges within the connection radius, and an
// optional arrow marker pointing at the seed node. Edges are derived from the
// row coordinates; on a torus the wrapped ones are skipped so no segment
// crosses the whole canvas. Output is deterministic for identical input.
std::string render_svg(const std::vector<NodeRow>& rows, const RegionSpec& region, double radius,
                       RenderStyle style, int seed_node = -1);

}  // namespace geocascade
