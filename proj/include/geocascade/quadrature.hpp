#pragma once

#include <functional>
#include <vector>

namespace geocascade {

// Definite-integral request over a finite interval. Callers with a
// semi-infinite weight truncate at a quantile whose tail mass is below half
// their tolerance and fold that mass into their own error budget (see
// analysis.cpp); this engine only ever sees [a, b].
struct QuadratureRequest {
  std::function<double(double)> integrand;
  double a = 0.0;
  double b = 1.0;
  // Interior non-smooth points. Simpson panels never straddle one; the list
  // is sorted/deduplicated and clipped to (a, b) internally.
  std::vector<double> breakpoints;
  double tolerance = 1e-10;        // absolute error target for the whole integral
  // Soft cap: once reached no panel is split further (pending panels still
  // spend two closing evaluations each so the error bound stays real).
  long long max_evaluations = 2'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;  // accumulated Richardson estimates
  bool converged = false;    // false: depth cap or evaluation budget hit
  long long evaluations = 0;
};

// Adaptive composite Simpson on each breakpoint-delimited panel. Each panel
// gets a tolerance share proportional to its width; subdivision stops when
// the Richardson estimate |S2 - S1|/15 meets the local share, at recursion
// depth 40, or when the evaluation budget runs out. Non-convergence is
// reported in the result, never silently absorbed into the value.
QuadratureResult integrate(const QuadratureRequest& request);

}  // namespace geocascade
