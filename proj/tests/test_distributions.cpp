#include <cmath>
#include <vector>

#include "doctest.h"
#include "geocascade/distributions.hpp"
#include "geocascade/quadrature.hpp"
#include "geocascade/rng.hpp"
#include "oracles.hpp"

using namespace geocascade;

TEST_CASE("uniform unit distribution basics") {
  const DistributionSpec u = DistributionSpec::uniform_unit();

  CHECK(u.pdf(-0.5) == 0.0);
  CHECK(u.pdf(0.5) == 1.0);
  CHECK(u.pdf(1.5) == 0.0);
  CHECK(u.cdf(-1.0) == 0.0);
  CHECK(u.cdf(0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(u.cdf(1.0) == 1.0);
  CHECK(u.cdf(2.0) == 1.0);
  CHECK(u.support_lo() == 0.0);
  CHECK(u.support_hi() == 1.0);
  CHECK(u.support_within_unit_interval());
  CHECK(u.pdf_kinks() == std::vector<double>{0.0, 1.0});
  CHECK(!u.describe().empty());
}

TEST_CASE("exponential distribution basics") {
  const DistributionSpec e = DistributionSpec::exponential(0.075);

  CHECK(e.pdf(-1.0) == 0.0);
  CHECK(e.pdf(1.0) == doctest::Approx(0.075 * std::exp(-0.075)).epsilon(1e-14));
  CHECK(e.cdf(0.0) == 0.0);
  // Reference value computed independently from -expm1 at rate 0.075.
  CHECK(e.cdf(1.0) == doctest::Approx(0.07225651367144714).epsilon(1e-14));
  CHECK(std::isinf(e.support_hi()));
  CHECK(!e.support_within_unit_interval());
  CHECK(e.pdf_kinks() == std::vector<double>{0.0});

  CHECK_THROWS_AS(DistributionSpec::exponential(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::exponential(-2.0), std::invalid_argument);
}

TEST_CASE("quantile inverts the cdf") {
  for (const DistributionSpec& d :
       {DistributionSpec::uniform_unit(), DistributionSpec::exponential(0.075),
        DistributionSpec::exponential(3.0)}) {
    for (int i = 1; i < 1000; ++i) {
      const double p = static_cast<double>(i) / 1000.0;
      const double x = d.quantile(p);
      CHECK(d.cdf(x) == doctest::Approx(p).epsilon(1e-10));
    }
  }
}

TEST_CASE("pdf integrates to one") {
  for (const DistributionSpec& d :
       {DistributionSpec::uniform_unit(), DistributionSpec::exponential(0.5),
        DistributionSpec::exponential(10.0)}) {
    QuadratureRequest req;
    req.integrand = [&d](double x) { return d.pdf(x); };
    req.a = 0.0;
    req.b = std::isinf(d.support_hi()) ? d.quantile(1.0 - 1e-13) : d.support_hi();
    req.breakpoints = d.pdf_kinks();
    req.tolerance = 1e-11;
    const QuadratureResult res = integrate(req);
    REQUIRE(res.converged);
    CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("cdf matches the integral of the pdf") {
  const DistributionSpec e = DistributionSpec::exponential(1.7);
  for (double x : {0.1, 0.8, 2.5}) {
    QuadratureRequest req;
    req.integrand = [&e](double t) { return e.pdf(t); };
    req.a = 0.0;
    req.b = x;
    req.tolerance = 1e-12;
    const QuadratureResult res = integrate(req);
    REQUIRE(res.converged);
    CHECK(res.value == doctest::Approx(e.cdf(x)).epsilon(1e-10));
  }
}

TEST_CASE("sampling is deterministic per seed") {
  const DistributionSpec e = DistributionSpec::exponential(2.0);
  RandomStream a(987654321), b(987654321), c(123);
  bool any_different = false;
  for (int i = 0; i < 32; ++i) {
    const double va = e.sample(a);
    CHECK(va == e.sample(b));
    if (va != e.sample(c)) any_different = true;
  }
  CHECK(any_different);
}

TEST_CASE("uniform samples stay in (0,1]") {
  const DistributionSpec u = DistributionSpec::uniform_unit();
  RandomStream rng(42);
  for (int i = 0; i < 100000; ++i) {
    const double x = u.sample(rng);
    REQUIRE(x > 0.0);
    REQUIRE(x <= 1.0);
  }
}

TEST_CASE("exponential sample mean matches 1/rate") {
  const DistributionSpec e = DistributionSpec::exponential(2.0);
  RandomStream rng(777);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += e.sample(rng);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("empirical distribution of samples matches the cdf") {
  for (const DistributionSpec& d :
       {DistributionSpec::uniform_unit(), DistributionSpec::exponential(0.7)}) {
    RandomStream rng(20240817);
    std::vector<double> samples;
    samples.reserve(100000);
    for (int i = 0; i < 100000; ++i) samples.push_back(d.sample(rng));
    const double ks = oracle::ks_statistic(std::move(samples), [&d](double x) { return d.cdf(x); });
    CHECK(ks < 0.01);
  }
}
