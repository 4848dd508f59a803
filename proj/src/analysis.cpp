#include "geocascade/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace geocascade {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

QuadratureResult run_quad(const QuadratureRequest& req, const char* what) {
  QuadratureResult res = integrate(req);
  if (!res.converged) {
    throw NumericalError(std::string(what) + ": quadrature did not converge (error bound " +
                         std::to_string(res.error_bound) + ")");
  }
  return res;
}

// Poisson pmf values 0..K where the kept mass reaches 1 - tail. Underflow of
// exp(-mean) (mean above ~745) makes every term zero, which the iteration cap
// turns into an explicit failure instead of a silent wrong answer.
std::vector<double> poisson_pmf_table(double mean, double tail) {
  std::vector<double> pmf;
  double term = std::exp(-mean);
  double kept = 0.0;
  long long k = 0;
  const long long cap = 64 + static_cast<long long>(16.0 * (mean + 1.0));
  while (kept < 1.0 - tail) {
    pmf.push_back(term);
    kept += term;
    ++k;
    term *= mean / static_cast<double>(k);
    if (k > cap) {
      throw NumericalError("series truncation stalled; weight mean " + std::to_string(mean) +
                           " is out of the workable range");
    }
  }
  return pmf;
}

}  // namespace

BracketValue vulnerability_bracket(const DistributionSpec& state_dist,
                                   const DistributionSpec& threshold_dist, int k, double tol) {
  if (k < 1) throw std::invalid_argument("vulnerability bracket needs k >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("bracket tolerance must be positive");

  const double kk = static_cast<double>(k);
  QuadratureRequest req;
  req.integrand = [&state_dist, &threshold_dist, kk](double phi) {
    return state_dist.cdf(kk - phi) * threshold_dist.pdf(phi);
  };
  // The state cdf vanishes once its argument drops to 0, so the integrand is
  // supported on [0, k] regardless of the threshold tail.
  req.a = 0.0;
  req.b = kk;
  for (double kink : state_dist.pdf_kinks()) req.breakpoints.push_back(kk - kink);
  for (double kink : threshold_dist.pdf_kinks()) req.breakpoints.push_back(kink);
  req.tolerance = tol;

  const QuadratureResult res = run_quad(req, "vulnerability bracket");
  return {clamp01(1.0 - res.value), res.error_bound};
}

BracketValue reliability_bracket(const DistributionSpec& state_dist,
                                 const DistributionSpec& threshold_dist, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bracket tolerance must be positive");

  // int_0^inf F_state(phi) f_threshold(phi) dphi. A finite threshold support
  // keeps the interval exact; otherwise truncate where the threshold tail
  // mass drops to tol/2 and carry that mass (the integrand is <= the pdf)
  // in the error bound.
  double tail = 0.0;
  double upper = threshold_dist.support_hi();
  double quad_tol = tol;
  if (std::isinf(upper)) {
    tail = 0.5 * tol;
    upper = threshold_dist.quantile(1.0 - 0.5 * tol);
    quad_tol = 0.5 * tol;
  }

  QuadratureRequest req;
  req.integrand = [&state_dist, &threshold_dist](double phi) {
    return state_dist.cdf(phi) * threshold_dist.pdf(phi);
  };
  req.a = 0.0;
  req.b = upper;
  for (double kink : state_dist.pdf_kinks()) req.breakpoints.push_back(kink);
  for (double kink : threshold_dist.pdf_kinks()) req.breakpoints.push_back(kink);
  req.tolerance = quad_tol;

  const QuadratureResult res = run_quad(req, "reliability bracket");
  return {clamp01(1.0 - res.value), res.error_bound + tail};
}

double vulnerability_prob(const DistributionSpec& state_dist,
                          const DistributionSpec& threshold_dist, int k, double tol) {
  const double eff = std::min(tol, 1e-9);
  const BracketValue b = vulnerability_bracket(state_dist, threshold_dist, k, eff);
  return std::pow(b.value, k);
}

double reliability_prob(const DistributionSpec& state_dist,
                        const DistributionSpec& threshold_dist, int k, double tol) {
  if (k < 0) throw std::invalid_argument("reliability probability needs k >= 0");
  if (k == 0) return 1.0;  // empty product over neighbors
  const double eff = std::min(tol, 1e-9);
  const BracketValue b = reliability_bracket(state_dist, threshold_dist, eff);
  return std::pow(b.value, k);
}

DegreeConditionReport degree_condition(const DistributionSpec& state_dist,
                                       const DistributionSpec& threshold_dist, double lambda,
                                       double lambda1, int k_max, double tol) {
  if (!(lambda1 > 0.0) || !(lambda > lambda1)) {
    throw std::invalid_argument("degree condition needs lambda > lambda1 > 0");
  }
  if (k_max < 1) throw std::invalid_argument("degree condition needs k_max >= 1");

  DegreeConditionReport report;
  report.ratio = lambda1 / lambda;
  report.rows.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    DegreeConditionRow row;
    row.k = k;
    row.lhs = vulnerability_prob(state_dist, threshold_dist, k, tol);
    row.pass = row.lhs >= report.ratio;
    report.rows.push_back(row);
  }
  while (report.prefix < k_max && report.rows[static_cast<std::size_t>(report.prefix)].pass) {
    ++report.prefix;
  }
  report.caveat =
      "The underlying sufficient condition requires the inequality for every degree up to a "
      "density-dependent cutoff that is external input; the passing prefix reported here is "
      "conclusive only if it covers that cutoff.";
  return report;
}

SeriesBound weak_series_from_base(double base, double lambda, double tol) {
  if (!(lambda > 0.0)) throw std::invalid_argument("series bound needs lambda > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("series tolerance must be positive");
  base = clamp01(base);

  const double mean_k = 0.5 * lambda;
  const double mean_m = lambda * (2.0 * std::sqrt(2.0) + std::numbers::pi);
  const std::vector<double> pk = poisson_pmf_table(mean_k, 0.5 * tol);
  const std::vector<double> pm = poisson_pmf_table(mean_m, 0.5 * tol);

  double value = 0.0;
  for (std::size_t k = 0; k < pk.size(); ++k) {
    double inner = 0.0;
    for (std::size_t m = 0; m < pm.size(); ++m) {
      const long long expo =
          (static_cast<long long>(m) + static_cast<long long>(k) - 1) * static_cast<long long>(k);
      if (expo <= 0) continue;  // base^0 = 1, so the summand is 0
      inner += pm[m] * (1.0 - std::pow(base, static_cast<double>(expo)));
    }
    value += pk[k] * inner;
  }

  const double kept_k = std::accumulate(pk.begin(), pk.end(), 0.0);
  const double kept_m = std::accumulate(pm.begin(), pm.end(), 0.0);

  SeriesBound out;
  out.value = value;
  out.truncation_bound = std::max(0.0, 1.0 - kept_k) + std::max(0.0, 1.0 - kept_m);
  out.satisfied = out.value + out.truncation_bound < kWeakSeriesBound;
  out.k_terms = static_cast<int>(pk.size()) - 1;
  out.m_terms = static_cast<int>(pm.size()) - 1;
  return out;
}

SeriesBound weak_series(const DistributionSpec& state_dist, const DistributionSpec& threshold_dist,
                        double lambda, double tol) {
  const double bracket_tol = std::min(tol, 1e-10);
  const BracketValue base = reliability_bracket(state_dist, threshold_dist, bracket_tol);
  SeriesBound out = weak_series_from_base(base.value, lambda, tol);

  // Propagate the bracket uncertainty through d/d(base) of the summand,
  // sum_k sum_m p_k p_m * e * base^(e-1), so the reported bound covers it.
  const double mean_k = 0.5 * lambda;
  const double mean_m = lambda * (2.0 * std::sqrt(2.0) + std::numbers::pi);
  const std::vector<double> pk = poisson_pmf_table(mean_k, 0.5 * tol);
  const std::vector<double> pm = poisson_pmf_table(mean_m, 0.5 * tol);
  double slope = 0.0;
  for (std::size_t k = 0; k < pk.size(); ++k) {
    for (std::size_t m = 0; m < pm.size(); ++m) {
      const long long expo =
          (static_cast<long long>(m) + static_cast<long long>(k) - 1) * static_cast<long long>(k);
      if (expo <= 0) continue;
      slope += pk[k] * pm[m] * static_cast<double>(expo) *
               std::pow(base.value, static_cast<double>(expo - 1));
    }
  }
  out.truncation_bound += slope * base.error_bound;
  out.satisfied = out.value + out.truncation_bound < kWeakSeriesBound;
  return out;
}

double solve_rate_bound(double ratio) {
  if (!(ratio > 0.0) || !(ratio < 1.0)) {
    throw std::invalid_argument("rate bound needs a ratio strictly between 0 and 1");
  }
  const auto g = [](double x) { return -std::expm1(-x) / x; };  // strictly decreasing on (0, inf)

  double lo = 1.0;
  double hi = 1.0;
  if (g(1.0) > ratio) {
    hi = 2.0;
    while (g(hi) > ratio && hi < 1e12) {
      lo = hi;
      hi *= 2.0;
    }
  } else {
    lo = 0.5;
    while (g(lo) <= ratio && lo > 1e-300) {
      hi = lo;
      lo *= 0.5;
    }
  }

  for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > ratio ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double critical_rate(const DistributionSpec& state_dist, double lambda, double tol) {
  if (!(lambda > 0.0)) throw std::invalid_argument("critical rate needs lambda > 0");
  const auto satisfied = [&](double mu) {
    return weak_series(state_dist, DistributionSpec::exponential(mu), lambda, tol).satisfied;
  };

  // The series value decreases as the threshold rate grows (larger rate means
  // smaller thresholds, a larger reliability bracket, smaller summands), so a
  // doubling/halving search brackets the boundary.
  double hi = 1.0;
  int guard = 0;
  while (!satisfied(hi)) {
    hi *= 2.0;
    if (++guard > 60) throw NumericalError("critical rate: no satisfying rate below 2^60");
  }

  double lo = 0.0;
  if (hi > 1.0) {
    lo = 0.5 * hi;
  } else {
    lo = 0.5;
    while (satisfied(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-9) {
        lo = 0.0;
        break;
      }
    }
  }

  while (hi - lo > 0.5) {
    const double mid = 0.5 * (lo + hi);
    (satisfied(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

AnalysisReport build_analysis_report(const DistributionSpec& state_dist,
                                     const DistributionSpec& threshold_dist, double lambda,
                                     double lambda1, int k_max, double quad_tol,
                                     double series_tol) {
  if (!(lambda > 0.0)) throw std::invalid_argument("analysis needs lambda > 0");
  if (k_max < 1) throw std::invalid_argument("analysis needs k_max >= 1");
  if (!(quad_tol > 0.0) || !(series_tol > 0.0)) {
    throw std::invalid_argument("analysis tolerances must be positive");
  }

  AnalysisReport report;
  report.state_dist = state_dist;
  report.threshold_dist = threshold_dist;
  report.lambda = lambda;
  report.lambda1 = lambda1;
  report.k_max = k_max;

  const double eff = std::min(quad_tol, 1e-9);
  const BracketValue hr = reliability_bracket(state_dist, threshold_dist, eff);
  for (int k = 1; k <= k_max; ++k) {
    const BracketValue hv = vulnerability_bracket(state_dist, threshold_dist, k, eff);
    report.vulnerability.push_back(std::pow(hv.value, k));
    report.vulnerability_err.push_back(static_cast<double>(k) * hv.error_bound);
    report.reliability.push_back(std::pow(hr.value, k));
    report.reliability_err.push_back(static_cast<double>(k) * hr.error_bound);
  }

  if (lambda1 > 0.0) {
    report.has_degree_condition = true;
    report.degree_condition =
        degree_condition(state_dist, threshold_dist, lambda, lambda1, k_max, quad_tol);
    report.has_rate_bound = true;
    report.rate_bound = solve_rate_bound(lambda1 / lambda);
    report.rate_bound_pass =
        threshold_dist.kind == DistKind::exponential && threshold_dist.mu < report.rate_bound;
  }

  report.weak_series = weak_series(state_dist, threshold_dist, lambda, series_tol);
  report.critical_rate = critical_rate(state_dist, lambda, series_tol);
  return report;
}

}  // namespace geocascade
