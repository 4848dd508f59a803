#pragma once

#include <utility>
#include <vector>

#include "geocascade/rng.hpp"

namespace geocascade {

enum class Boundary { box, torus };

struct RegionSpec {
  double width = 20.0;
  double height = 20.0;
  Boundary boundary = Boundary::box;

  // Squared displacement under the region metric (wrapped on a torus).
  double distance2(double x0, double y0, double x1, double y1) const;
};

struct PointProcessSpec {
  enum class Mode { poisson, fixed_count };
  Mode mode = Mode::poisson;
  double lambda = 4.0;  // nodes per unit area (poisson)
  long long count = 0;  // exact node count (fixed_count)

  static PointProcessSpec poisson(double lambda);       // throws on lambda <= 0
  static PointProcessSpec fixed_count(long long n);     // throws on n < 0
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Geometric graph: nodes at sampled coordinates, undirected edge iff the
// region-metric distance is <= radius. Adjacency comes from a bucket grid
// with cell side >= radius (so a 3x3 cell neighborhood covers the disk);
// the grid is kept on the struct for inspection and tests.
struct SpatialGraph {
  RegionSpec region;
  double radius = 1.0;
  std::vector<Point> points;
  std::vector<std::vector<int>> adjacency;  // sorted ascending, no self-loops

  int grid_cols = 0;
  int grid_rows = 0;
  std::vector<std::vector<int>> grid_cells;  // row-major; node ids per cell

  int node_count() const { return static_cast<int>(points.size()); }
  long long edge_count() const;
  int degree(int node) const { return static_cast<int>(adjacency[node].size()); }
  int cell_of(double x, double y) const;
};

// poisson mode: count ~ Poisson(lambda * area), then count i.i.d. uniform
// positions (x before y per node); fixed_count mode: exactly n positions.
std::vector<Point> sample_points(const RegionSpec& region, const PointProcessSpec& pp,
                                 RandomStream& rng);

// Throws std::invalid_argument when radius <= 0 or a point lies outside the
// region. The grid scan result is identical to the all-pairs check.
SpatialGraph build_graph(std::vector<Point> points, double radius, const RegionSpec& region);

// Scaling identity: the geometric graph at (density, radius) has the same
// connectivity law as the unit-radius graph at density * radius^2.
std::pair<double, double> normalize_scale(double lambda, double radius);

// Concrete-coordinate version: rescales everything by 1/radius and rebuilds;
// the edge set is preserved exactly.
SpatialGraph normalize_scale(const SpatialGraph& g);

}  // namespace geocascade
