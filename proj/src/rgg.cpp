#include "geocascade/rgg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace geocascade {

double RegionSpec::distance2(double x0, double y0, double x1, double y1) const {
  double dx = std::abs(x0 - x1);
  double dy = std::abs(y0 - y1);
  if (boundary == Boundary::torus) {
    dx = std::min(dx, width - dx);
    dy = std::min(dy, height - dy);
  }
  return dx * dx + dy * dy;
}

PointProcessSpec PointProcessSpec::poisson(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("poisson intensity must be > 0");
  PointProcessSpec pp;
  pp.mode = Mode::poisson;
  pp.lambda = lambda;
  return pp;
}

PointProcessSpec PointProcessSpec::fixed_count(long long n) {
  if (n < 0) throw std::invalid_argument("fixed_count needs n >= 0");
  PointProcessSpec pp;
  pp.mode = Mode::fixed_count;
  pp.count = n;
  return pp;
}

long long SpatialGraph::edge_count() const {
  long long deg_sum = 0;
  for (const auto& nbrs : adjacency) deg_sum += static_cast<long long>(nbrs.size());
  return deg_sum / 2;
}

int SpatialGraph::cell_of(double x, double y) const {
  const double cw = region.width / grid_cols;
  const double ch = region.height / grid_rows;
  const int col = std::clamp(static_cast<int>(x / cw), 0, grid_cols - 1);
  const int row = std::clamp(static_cast<int>(y / ch), 0, grid_rows - 1);
  return row * grid_cols + col;
}

std::vector<Point> sample_points(const RegionSpec& region, const PointProcessSpec& pp,
                                 RandomStream& rng) {
  if (!(region.width > 0.0) || !(region.height > 0.0))
    throw std::invalid_argument("region dimensions must be positive");
  long long n = 0;
  if (pp.mode == PointProcessSpec::Mode::poisson) {
    n = rng.poisson(pp.lambda * region.width * region.height);
  } else {
    n = pp.count;
  }
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, region.width);
    const double y = rng.uniform(0.0, region.height);
    points.push_back({x, y});
  }
  return points;
}

SpatialGraph build_graph(std::vector<Point> points, double radius, const RegionSpec& region) {
  if (!(radius > 0.0)) throw std::invalid_argument("connection radius must be > 0");
  if (!(region.width > 0.0) || !(region.height > 0.0))
    throw std::invalid_argument("region dimensions must be positive");
  for (const Point& p : points) {
    if (!(p.x >= 0.0 && p.x <= region.width && p.y >= 0.0 && p.y <= region.height))
      throw std::invalid_argument("point outside region");
  }

  SpatialGraph g;
  g.region = region;
  g.radius = radius;
  g.points = std::move(points);
  const int n = g.node_count();
  g.adjacency.assign(n, {});

  // Cell side is width/floor(width/r) >= r, so candidates for any node sit in
  // its own cell and the 8 surrounding ones. The cap only ever enlarges cells
  // (still >= r) and bounds grid memory for tiny radii.
  auto cell_count = [](double extent, double r) {
    const long long c = static_cast<long long>(std::floor(extent / r));
    return static_cast<int>(std::clamp<long long>(c, 1, 4096));
  };
  g.grid_cols = cell_count(region.width, radius);
  g.grid_rows = cell_count(region.height, radius);
  g.grid_cells.assign(static_cast<std::size_t>(g.grid_cols) * g.grid_rows, {});
  for (int i = 0; i < n; ++i)
    g.grid_cells[g.cell_of(g.points[i].x, g.points[i].y)].push_back(i);

  const bool wrap = region.boundary == Boundary::torus;
  const double r2 = radius * radius;
  std::array<int, 9> cells{};
  for (int i = 0; i < n; ++i) {
    const int home = g.cell_of(g.points[i].x, g.points[i].y);
    const int col = home % g.grid_cols;
    const int row = home / g.grid_cols;
    int m = 0;
    for (int dr = -1; dr <= 1; ++dr) {
      int rr = row + dr;
      if (wrap) rr = (rr + g.grid_rows) % g.grid_rows;
      if (rr < 0 || rr >= g.grid_rows) continue;
      for (int dc = -1; dc <= 1; ++dc) {
        int cc = col + dc;
        if (wrap) cc = (cc + g.grid_cols) % g.grid_cols;
        if (cc < 0 || cc >= g.grid_cols) continue;
        cells[m++] = rr * g.grid_cols + cc;
      }
    }
    // Wrapping can alias cells when the grid is 1 or 2 wide.
    std::sort(cells.begin(), cells.begin() + m);
    m = static_cast<int>(std::unique(cells.begin(), cells.begin() + m) - cells.begin());

    for (int c = 0; c < m; ++c) {
      for (const int j : g.grid_cells[cells[c]]) {
        if (j <= i) continue;
        if (g.region.distance2(g.points[i].x, g.points[i].y, g.points[j].x, g.points[j].y) <= r2) {
          g.adjacency[i].push_back(j);
          g.adjacency[j].push_back(i);
        }
      }
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::pair<double, double> normalize_scale(double lambda, double radius) {
  if (!(lambda > 0.0) || !(radius > 0.0))
    throw std::invalid_argument("normalize_scale needs lambda > 0 and radius > 0");
  return {lambda * radius * radius, 1.0};
}

SpatialGraph normalize_scale(const SpatialGraph& g) {
  RegionSpec scaled = g.region;
  scaled.width /= g.radius;
  scaled.height /= g.radius;
  std::vector<Point> points = g.points;
  for (Point& p : points) {
    p.x /= g.radius;
    p.y /= g.radius;
    // Guard against rounding pushing a boundary point just past the edge.
    p.x = std::min(p.x, scaled.width);
    p.y = std::min(p.y, scaled.height);
  }
  return build_graph(std::move(points), 1.0, scaled);
}

}  // namespace geocascade
