#include "geocascade/svg.hpp"

#include <cstdio>

#include "geocascade/errors.hpp"

namespace geocascade {

namespace {

constexpr double kScale = 40.0;   // pixels per region unit
constexpr double kMargin = 24.0;  // pixel border around the region
constexpr double kNodeRadius = 3.4;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

bool solid_for(const NodeRow& row, RenderStyle style) {
  switch (style) {
    case RenderStyle::class_label:
      return row.cls == "HV";
    case RenderStyle::reliability:
      return row.cls == "HR";
    case RenderStyle::failed:
      return row.failed;
    case RenderStyle::functional:
      return !row.failed;
  }
  return false;
}

}  // namespace

RenderStyle parse_render_style(const std::string& name) {
  if (name == "class") return RenderStyle::class_label;
  if (name == "reliability") return RenderStyle::reliability;
  if (name == "failed") return RenderStyle::failed;
  if (name == "functional") return RenderStyle::functional;
  throw ConfigError("unknown render style '" + name +
                    "' (expected class, reliability, failed, or functional)");
}

std::string render_svg(const std::vector<NodeRow>& rows, const RegionSpec& region, double radius,
                       RenderStyle style, int seed_node) {
  const double width = kScale * region.width + 2.0 * kMargin;
  const double height = kScale * region.height + 2.0 * kMargin;
  const auto sx = [&](double x) { return kMargin + kScale * x; };
  // SVG y grows downward; flip so the region's y grows upward as plotted.
  const auto sy = [&](double y) { return kMargin + kScale * (region.height - y); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) + "\" height=\"" +
         px(height) + "\" viewBox=\"0 0 " + px(width) + " " + px(height) + "\">\n";
  svg +=
      "  <defs>\n"
      "    <marker id=\"seed-arrow\" markerWidth=\"10\" markerHeight=\"10\" refX=\"8\" "
      "refY=\"3\" orient=\"auto\">\n"
      "      <path d=\"M0,0 L8,3 L0,6 Z\" fill=\"#c0392b\"/>\n"
      "    </marker>\n"
      "  </defs>\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"" + px(width) + "\" height=\"" + px(height) +
         "\" fill=\"#ffffff\"/>\n";

  // Edges from the row coordinates; a torus region's wrapped pairs would draw
  // segments across the whole picture, so only direct-distance pairs appear.
  std::vector<Point> points;
  points.reserve(rows.size());
  for (const NodeRow& row : rows) points.push_back({row.x, row.y});
  const SpatialGraph graph = build_graph(points, radius, region);

  svg += "  <g stroke=\"#c5ccd6\" stroke-width=\"0.7\">\n";
  for (int i = 0; i < graph.node_count(); ++i) {
    for (int j : graph.adjacency[static_cast<std::size_t>(i)]) {
      if (j <= i) continue;
      const Point& a = points[static_cast<std::size_t>(i)];
      const Point& b = points[static_cast<std::size_t>(j)];
      const double dx = a.x - b.x;
      const double dy = a.y - b.y;
      if (dx * dx + dy * dy > radius * radius) continue;  // wrapped-only pair
      svg += "    <line x1=\"" + px(sx(a.x)) + "\" y1=\"" + px(sy(a.y)) + "\" x2=\"" +
             px(sx(b.x)) + "\" y2=\"" + px(sy(b.y)) + "\"/>\n";
    }
  }
  svg += "  </g>\n";

  svg += "  <g stroke-width=\"1.1\">\n";
  for (const NodeRow& row : rows) {
    const bool solid = solid_for(row, style);
    svg += "    <circle class=\"node ";
    svg += solid ? "solid" : "hollow";
    svg += "\" cx=\"" + px(sx(row.x)) + "\" cy=\"" + px(sy(row.y)) + "\" r=\"" + px(kNodeRadius) +
           "\" fill=\"";
    svg += solid ? "#1f3b73" : "#ffffff";
    svg += "\" stroke=\"#33415c\"/>\n";
  }
  svg += "  </g>\n";

  if (seed_node >= 0) {
    bool found = false;
    for (const NodeRow& row : rows) {
      if (row.id != seed_node) continue;
      const double tx = sx(row.x);
      const double ty = sy(row.y);
      svg += "  <line class=\"seed-marker\" x1=\"" + px(tx - 34.0) + "\" y1=\"" + px(ty - 34.0) +
             "\" x2=\"" + px(tx - 7.0) + "\" y2=\"" + px(ty - 7.0) +
             "\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#seed-arrow)\"/>\n";
      found = true;
      break;
    }
    if (!found) {
      throw ConfigError("seed node " + std::to_string(seed_node) +
                        " is not present in the rendered rows");
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace geocascade
