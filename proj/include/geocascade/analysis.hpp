#pragma once

#include <string>
#include <vector>

#include "geocascade/distributions.hpp"
#include "geocascade/errors.hpp"
#include "geocascade/quadrature.hpp"

namespace geocascade {

// Exact rational comparison constant for the weak-component series condition.
inline constexpr double kWeakSeriesBound = 1.0 / 27.0;

// One-neighbor integral brackets behind the per-degree powers:
//   vulnerability_bracket(k) = 1 - int_0^k F_state(k - phi) f_threshold(phi) dphi
//   reliability_bracket     = 1 - int_0^inf F_state(phi) f_threshold(phi) dphi
// error_bound covers quadrature error plus any truncated tail mass.
struct BracketValue {
  double value = 0.0;
  double error_bound = 0.0;
};

BracketValue vulnerability_bracket(const DistributionSpec& state_dist,
                                   const DistributionSpec& threshold_dist, int k,
                                   double tol = 1e-10);
BracketValue reliability_bracket(const DistributionSpec& state_dist,
                                 const DistributionSpec& threshold_dist, double tol = 1e-10);

// Analytic per-degree probabilities: the one-neighbor bracket raised to the
// k-th power. Throws NumericalError if the bracket cannot be resolved to
// within 1e-9 before exponentiation. vulnerability_prob needs k >= 1;
// reliability_prob accepts k = 0 (empty product, exactly 1).
double vulnerability_prob(const DistributionSpec& state_dist,
                          const DistributionSpec& threshold_dist, int k, double tol = 1e-10);
double reliability_prob(const DistributionSpec& state_dist,
                        const DistributionSpec& threshold_dist, int k, double tol = 1e-10);

// Per-degree test of bracket(k)^k >= lambda1/lambda with the longest passing
// prefix. The sufficient condition behind it needs the inequality up to a
// density-dependent degree cutoff that is external input; the fixed caveat
// string states that limitation wherever the report is rendered.
struct DegreeConditionRow {
  int k = 0;
  double lhs = 0.0;
  bool pass = false;
};
struct DegreeConditionReport {
  double ratio = 0.0;  // lambda1 / lambda
  std::vector<DegreeConditionRow> rows;
  int prefix = 0;  // largest L such that k = 1..L all pass
  std::string caveat;
};
DegreeConditionReport degree_condition(const DistributionSpec& state_dist,
                                       const DistributionSpec& threshold_dist, double lambda,
                                       double lambda1, int k_max, double tol = 1e-10);

// Double Poisson-weighted series over (k, m) of 1 - base^((m+k-1)k) with
// weight means lambda/2 and lambda(2*sqrt(2)+pi). Truncation keeps tail mass
// below tol (half per axis; the summand lies in [0,1] so dropped mass bounds
// the error directly). `satisfied` is the conservative verdict
// value + truncation_bound < 1/27.
struct SeriesBound {
  double value = 0.0;
  double truncation_bound = 0.0;
  bool satisfied = false;
  int k_terms = 0;  // highest degree index kept
  int m_terms = 0;
};
SeriesBound weak_series_from_base(double base, double lambda, double tol);
SeriesBound weak_series(const DistributionSpec& state_dist,
                        const DistributionSpec& threshold_dist, double lambda,
                        double tol = 1e-12);

// Root of (1 - e^{-x})/x = ratio for ratio in (0,1); the map is continuous
// and strictly decreasing from 1 to 0, so the root is unique. Bisection with
// doubling/halving bracket search, absolute tolerance 1e-10.
double solve_rate_bound(double ratio);

// Smallest exponential threshold rate whose weak-component series bound is
// satisfied at this density: exponential bracketing plus bisection down to
// absolute width 0.5 (the bound is decreasing in the rate).
double critical_rate(const DistributionSpec& state_dist, double lambda, double tol = 1e-12);

struct AnalysisReport {
  DistributionSpec state_dist;
  DistributionSpec threshold_dist;
  double lambda = 0.0;
  double lambda1 = 0.0;  // 0 when not supplied
  int k_max = 10;

  std::vector<double> vulnerability;      // index i holds k = i+1
  std::vector<double> vulnerability_err;  // propagated bracket error, k * err
  std::vector<double> reliability;
  std::vector<double> reliability_err;

  bool has_degree_condition = false;
  DegreeConditionReport degree_condition;

  SeriesBound weak_series;

  bool has_rate_bound = false;
  double rate_bound = 0.0;
  bool rate_bound_pass = false;  // exponential threshold rate < rate_bound

  double critical_rate = 0.0;
};

// lambda1 <= 0 means "not supplied": the degree condition and rate bound are
// skipped. Throws ConfigError-compatible std::invalid_argument on bad
// parameters and NumericalError when a numeric target cannot be met.
AnalysisReport build_analysis_report(const DistributionSpec& state_dist,
                                     const DistributionSpec& threshold_dist, double lambda,
                                     double lambda1, int k_max, double quad_tol = 1e-10,
                                     double series_tol = 1e-12);

}  // namespace geocascade
