#include "geocascade/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace geocascade {

DistributionSpec DistributionSpec::uniform_unit() {
  DistributionSpec d;
  d.kind = DistKind::uniform_unit;
  return d;
}

DistributionSpec DistributionSpec::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential rate must be > 0");
  DistributionSpec d;
  d.kind = DistKind::exponential;
  d.mu = rate;
  return d;
}

double DistributionSpec::pdf(double x) const {
  switch (kind) {
    case DistKind::uniform_unit:
      return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
    case DistKind::exponential:
      return x >= 0.0 ? mu * std::exp(-mu * x) : 0.0;
  }
  return 0.0;
}

double DistributionSpec::cdf(double x) const {
  switch (kind) {
    case DistKind::uniform_unit:
      if (x <= 0.0) return 0.0;
      if (x >= 1.0) return 1.0;
      return x;
    case DistKind::exponential:
      return x > 0.0 ? -std::expm1(-mu * x) : 0.0;
  }
  return 0.0;
}

double DistributionSpec::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("quantile needs p in [0,1)");
  switch (kind) {
    case DistKind::uniform_unit:
      return p;
    case DistKind::exponential:
      return -std::log1p(-p) / mu;
  }
  return 0.0;
}

double DistributionSpec::sample(RandomStream& rng) const {
  switch (kind) {
    case DistKind::uniform_unit:
      return rng.uniform01();  // exactly the (0,1] support
    case DistKind::exponential:
      return rng.exponential(mu);
  }
  return 0.0;
}

double DistributionSpec::support_lo() const { return 0.0; }

double DistributionSpec::support_hi() const {
  return kind == DistKind::uniform_unit ? 1.0 : std::numeric_limits<double>::infinity();
}

bool DistributionSpec::support_within_unit_interval() const {
  return kind == DistKind::uniform_unit;
}

std::vector<double> DistributionSpec::pdf_kinks() const {
  switch (kind) {
    case DistKind::uniform_unit:
      return {0.0, 1.0};
    case DistKind::exponential:
      return {0.0};
  }
  return {};
}

std::string DistributionSpec::describe() const {
  switch (kind) {
    case DistKind::uniform_unit:
      return "uniform(0,1]";
    case DistKind::exponential:
      return "exponential(mu=" + std::to_string(mu) + ")";
  }
  return "?";
}

}  // namespace geocascade
