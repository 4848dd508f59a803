#pragma once

#include <string>
#include <vector>

#include "geocascade/rng.hpp"

namespace geocascade {

enum class DistKind { uniform_unit, exponential };

// Continuous scalar distribution with closed-form CDF/quantile and an
// inverse-CDF sampler. Two kinds are supported: uniform on (0,1] (node
// states) and exponential with rate mu (failure thresholds). The uniform CDF
// is treated as x on [0,1]; the open left endpoint carries no mass.
struct DistributionSpec {
  DistKind kind = DistKind::uniform_unit;
  double mu = 1.0;  // rate parameter, exponential only

  static DistributionSpec uniform_unit();
  static DistributionSpec exponential(double rate);  // throws on rate <= 0

  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;  // inverse CDF, p in [0,1)
  double sample(RandomStream& rng) const;

  double support_lo() const;
  double support_hi() const;  // +infinity for exponential

  // True when every sample lies in (0,1]; state assignment requires this.
  bool support_within_unit_interval() const;

  // Points where the pdf is discontinuous (support edges). Quadrature over
  // products involving this distribution should break panels here.
  std::vector<double> pdf_kinks() const;

  std::string describe() const;
};

}  // namespace geocascade
