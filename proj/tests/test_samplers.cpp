// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idlab/samplers.hpp"
#include "idlab/special.hpp"
#include "oracles.hpp"

using namespace idlab;

namespace {

constexpr int kN = 100000;

double sample_mean(const EmpiricalDist& d) {
  double acc = 0.0;
  for (double x : d.values()) acc += x;
  return acc / static_cast<double>(d.count());
}

double sample_sd_of_mean(const EmpiricalDist& d) {
  double mean = sample_mean(d);
  double acc = 0.0;
  for (double x : d.values()) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(d.count()) / static_cast<double>(d.count()));
}

}  // namespace

TEST_CASE("identical seed and stream reproduce identical draws") {
  SeededStream a(123, 5), b(123, 5);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i)
    if (a.next_u64() != b.next_u64()) ++mismatches;
  CHECK(mismatches == 0);
  SeededStream c(123, 6);
  bool differs = false;
  SeededStream a2(123, 5);
  for (int i = 0; i < 1000; ++i)
    if (a2.next_u64() != c.next_u64()) differs = true;
  CHECK(differs);

  SeededStream s1(9, 0), s2(9, 0);
  EmpiricalDist d1 = sample_positive_stable(0.5, 1000, s1);
  EmpiricalDist d2 = sample_positive_stable(0.5, 1000, s2);
  CHECK(d1.values() == d2.values());
}

TEST_CASE("uniform stays inside the open interval") {
  SeededStream s(1, 0);
  int bad = 0;
  for (int i = 0; i < 100000; ++i) {
    double u = s.uniform();
    if (!(u > 0.0 && u < 1.0)) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("poisson sampler matches the pmf in both regimes") {
  SeededStream s(17, 0);
  for (double lambda : {4.0, 40.0}) {
    std::vector<double> counts(200, 0.0);
    for (int i = 0; i < kN; ++i) {
      std::int64_t k = s.poisson(lambda);
      if (k < 200) counts[static_cast<std::size_t>(k)] += 1.0;
    }
    ProbSeq pmf = poisson_pmf(lambda, 199);
    for (int k = 0; k < 200; ++k) {
      double expect = pmf.p(k) * kN;
      if (expect < 25.0) continue;
      double sigma = std::sqrt(pmf.p(k) * (1.0 - pmf.p(k)) * kN);
      CAPTURE(lambda);
      CAPTURE(k);
      CHECK(std::abs(counts[static_cast<std::size_t>(k)] - expect) < 4.0 * sigma);
    }
  }
}

TEST_CASE("gamma sampler has the right first two moments") {
  SeededStream s(18, 0);
  for (double shape : {0.5, 2.0, 7.5}) {
    std::vector<double> v(kN);
    for (double& x : v) x = s.gamma(shape);
    EmpiricalDist d = EmpiricalDist::from_samples(std::move(v));
    CAPTURE(shape);
    CHECK(std::abs(sample_mean(d) - shape) < 4.0 * sample_sd_of_mean(d));
  }
}

TEST_CASE("positive stable at alpha 1 is the unit mass") {
  SeededStream s(19, 0);
  for (int i = 0; i < 100; ++i) CHECK(draw_positive_stable(1.0, s) == 1.0);
}

TEST_CASE("positive stable empirical transform matches exp(-s^alpha)") {
  SeededStream s(20, 0);
  EmpiricalDist d = sample_positive_stable(0.5, kN, s);
  for (double point : {0.5, 1.0, 2.0, 4.0}) {
    EmpiricalLTCheck c = empirical_lt_check(d, point, std::exp(-std::pow(point, 0.5)));
    CAPTURE(point);
    CHECK(std::abs(c.empirical - c.expected) < 3.0 * c.sigma);
  }
  // e^(-4^(1/2)) = e^-2.
  EmpiricalLTCheck c4 = empirical_lt_check(d, 4.0, std::exp(-2.0));
  CHECK(std::abs(c4.empirical - std::exp(-2.0)) < 3.0 * c4.sigma);
}

TEST_CASE("positive stable empirical transform at alpha 0.7") {
  SeededStream s(21, 0);
  EmpiricalDist d = sample_positive_stable(0.7, kN, s);
  for (double point : {0.5, 1.0, 2.0}) {
    EmpiricalLTCheck c = empirical_lt_check(d, point, std::exp(-std::pow(point, 0.7)));
    CHECK(std::abs(c.empirical - c.expected) < 3.0 * c.sigma);
  }
}

TEST_CASE("mittag-leffler reduces to the exponential at alpha 1") {
  SeededStream s(22, 0);
  EmpiricalDist d = sample_mittag_leffler(1.0, kN, s);
  double ks = ks_distance(d, [](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); });
  CHECK(ks < 0.01);
}

TEST_CASE("mittag-leffler empirical transform matches 1/(1+s^alpha)") {
  SeededStream s(23, 0);
  EmpiricalDist d = sample_mittag_leffler(0.5, kN, s);
  for (double point : {0.5, 1.0, 2.0}) {
    EmpiricalLTCheck c = empirical_lt_check(d, point, 1.0 / (1.0 + std::pow(point, 0.5)));
    CHECK(std::abs(c.empirical - c.expected) < 3.0 * c.sigma);
  }
}

TEST_CASE("geometric sums of mittag-leffler draws reproduce the law") {
  // N ~ geometric on {1,2,...} with p = 0.01; p^(1/alpha) sum_i X_i is
  // again the same law.
  const double p = 0.01, alpha = 0.5;
  SeededStream s(24, 0);
  std::vector<double> v(20000);
  for (double& x : v) {
    std::int64_t n = s.geometric_positive(p);
    double acc = 0.0;
    for (std::int64_t i = 0; i < n; ++i) acc += draw_mittag_leffler(alpha, s);
    x = std::pow(p, 1.0 / alpha) * acc;
  }
  SeededStream cross(24, 1);
  EmpiricalDist fresh = sample_mittag_leffler(alpha, 20000, cross);
  CHECK(ks_distance(EmpiricalDist::from_samples(std::move(v)), fresh) < 0.03);
}

TEST_CASE("discrete stable sampler at alpha 1 is Poisson") {
  SeededStream s(25, 0);
  EmpiricalDist d = sample_discrete_stable(DiscreteStableSpec(1.0, 2.0), kN, s);
  CHECK(std::abs(sample_mean(d) - 2.0) < 3.0 * sample_sd_of_mean(d));
}

TEST_CASE("discrete stable sampler matches the series pmf per bin") {
  SeededStream s(26, 0);
  DiscreteStableSpec spec(0.5, 1.0);
  EmpiricalDist d = sample_discrete_stable(spec, kN, s);
  ProbSeq pmf = discrete_stable_pmf(spec, 64);
  // Origin first: P(N=0) = exp(-1).
  double p0 = 0.0;
  for (double x : d.values())
    if (x == 0.0) p0 += 1.0;
  p0 /= kN;
  double sigma0 = std::sqrt(std::exp(-1.0) * (1.0 - std::exp(-1.0)) / kN);
  CHECK(std::abs(p0 - std::exp(-1.0)) < 3.0 * sigma0);
  for (int k = 0; k <= 64; ++k) {
    double expect = pmf.p(k);
    if (expect * kN < 25.0) continue;
    double hits = 0.0;
    for (double x : d.values())
      if (x == static_cast<double>(k)) hits += 1.0;
    double sigma = std::sqrt(expect * (1.0 - expect) / kN);
    CAPTURE(k);
    CHECK(std::abs(hits / kN - expect) < 4.0 * sigma);
  }
}

TEST_CASE("discrete stable sums thin back to the base law") {
  // Sum of 4 draws thinned by 4^(-1/alpha) is again the base law. The sum
  // is Poisson given its total intensity, and Bernoulli thinning of a
  // Poisson count thins the intensity, so the thinned sum is drawn exactly
  // as Poisson(c * sum of intensities). (A literal per-trial Bernoulli
  // pass is intractable here: the totals have no finite mean.)
  const double alpha = 0.5;
  DiscreteStableSpec spec(alpha, 1.0);
  double c = std::pow(4.0, -1.0 / alpha);
  SeededStream s(27, 0);
  std::vector<double> v(50000);
  for (double& x : v) {
    double intensity = 0.0;
    for (int i = 0; i < 4; ++i)
      intensity += std::pow(spec.lambda, 1.0 / alpha) * draw_positive_stable(alpha, s);
    x = static_cast<double>(s.poisson(c * intensity));
  }
  SeededStream cross(27, 1);
  EmpiricalDist fresh = sample_discrete_stable(spec, 50000, cross);
  CHECK(ks_distance(EmpiricalDist::from_samples(std::move(v)), fresh) < 0.03);
}

TEST_CASE("exponential mixtures follow their closed-form survival") {
  SeededStream s(28, 0);
  SUBCASE("degenerate mixing is the exponential law") {
    EmpiricalDist d = sample_exponential_mixture(LTSpec::degenerate(1.0), kN, s);
    CHECK(ks_distance(d, [](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); }) < 0.01);
  }
  SUBCASE("exponential mixing gives survival 1/(1+x)") {
    EmpiricalDist d = sample_exponential_mixture(LTSpec::gamma(1.0, 1.0), kN, s);
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
      double expect = 1.0 / (1.0 + x);
      double sigma = std::sqrt(expect * (1.0 - expect) / kN);
      CHECK(std::abs((1.0 - d.cdf(x)) - expect) < 3.0 * sigma);
    }
  }
  SUBCASE("gamma(2) mixing matches the quadrature oracle") {
    EmpiricalDist d = sample_exponential_mixture(LTSpec::gamma(2.0, 1.0), kN, s);
    for (double x : {0.5, 1.0, 2.0}) {
      // integral of e^(-x w) w e^(-w) dw over w >= 0.
      double oracle = test::simpson([x](double w) { return std::exp(-x * w) * w * std::exp(-w); }, 0.0,
                                    60.0, 4000);
      CHECK(oracle == doctest::Approx(std::pow(1.0 + x, -2.0)).epsilon(1e-8));
      double sigma = std::sqrt(oracle * (1.0 - oracle) / kN);
      CHECK(std::abs((1.0 - d.cdf(x)) - oracle) < 3.0 * sigma);
    }
  }
}

TEST_CASE("kolmogorov distance exact cases") {
  EmpiricalDist a = EmpiricalDist::from_samples({1.0, 2.0, 3.0});
  CHECK(ks_distance(a, a) == 0.0);

  EmpiricalDist zero = EmpiricalDist::from_samples({0.0});
  CHECK(ks_distance(zero, [](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); }) == 1.0);

  EmpiricalDist one = EmpiricalDist::from_samples({1.0});
  CHECK(ks_distance(zero, one) == 1.0);
  CHECK(ks_distance(one, zero) == 1.0);

  SeededStream s(29, 0);
  EmpiricalDist x = sample_mittag_leffler(0.5, 500, s);
  EmpiricalDist y = sample_mittag_leffler(0.5, 700, s);
  double d1 = ks_distance(x, y);
  CHECK(d1 == ks_distance(y, x));
  CHECK(d1 >= 0.0);
  CHECK(d1 <= 1.0);
}

TEST_CASE("empty samples are rejected") {
  CHECK_THROWS_AS(EmpiricalDist::from_samples({}), Error);
}

TEST_CASE("regularized incomplete gamma spot values") {
  // P(2, x) = 1 - e^-x (1 + x).
  for (double x : {0.1, 1.0, 2.5, 10.0}) {
    CHECK(gamma_p(2.0, x) == doctest::Approx(1.0 - std::exp(-x) * (1.0 + x)).epsilon(1e-12));
  }
  CHECK(gamma_p(0.5, 0.0) == 0.0);
  // P(1/2, x) = erf(sqrt(x)).
  CHECK(gamma_p(0.5, 1.0) == doctest::Approx(std::erf(1.0)).epsilon(1e-12));
}
