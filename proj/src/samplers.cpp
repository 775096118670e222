// SPDX-License-Identifier: Apache-2.0
#include "idlab/samplers.hpp"

#include <algorithm>
#include <cmath>

namespace idlab {

EmpiricalDist EmpiricalDist::from_samples(std::vector<double> values) {
  if (values.empty()) raise(errc::empty_sample, "empty sample");
  std::sort(values.begin(), values.end());
  EmpiricalDist d;
  d.values_ = std::move(values);
  return d;
}

double EmpiricalDist::cdf(double x) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double ks_distance(const EmpiricalDist& sample, const std::function<double(double)>& cdf) {
  const std::vector<double>& xs = sample.values();
  double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = cdf(xs[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_distance(const EmpiricalDist& a, const EmpiricalDist& b) {
  const std::vector<double>& xs = a.values();
  const std::vector<double>& ys = b.values();
  double na = static_cast<double>(xs.size());
  double nb = static_cast<double>(ys.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < xs.size() && j < ys.size()) {
    double x = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] <= x) ++i;
    while (j < ys.size() && ys[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double draw_positive_stable(double alpha, SeededStream& stream) {
  if (!(alpha > 0.0) || alpha > 1.0) raise(errc::invalid_parameter, "alpha must be in (0,1]");
  if (alpha == 1.0) return 1.0;
  // Kanter's representation: W uniform on (0, pi), E standard exponential;
  // X = sin(aW) sin((1-a)W)^((1-a)/a) / (sin(W)^(1/a) E^((1-a)/a))
  // has LT exp(-s^a).
  double w = 3.141592653589793238462643383280 * stream.uniform();
  double e = stream.exponential();
  double ratio = std::sin((1.0 - alpha) * w) / e;
  return std::sin(alpha * w) * std::pow(ratio, (1.0 - alpha) / alpha) / std::pow(std::sin(w), 1.0 / alpha);
}

EmpiricalDist sample_positive_stable(double alpha, int n, SeededStream& stream) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = draw_positive_stable(alpha, stream);
  return EmpiricalDist::from_samples(std::move(v));
}

double draw_mittag_leffler(double alpha, SeededStream& stream) {
  double e = stream.exponential();
  if (alpha == 1.0) return e;
  return std::pow(e, 1.0 / alpha) * draw_positive_stable(alpha, stream);
}

EmpiricalDist sample_mittag_leffler(double alpha, int n, SeededStream& stream) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = draw_mittag_leffler(alpha, stream);
  return EmpiricalDist::from_samples(std::move(v));
}

double draw_mixing(const LTSpec& phi, SeededStream& stream) {
  switch (phi.family()) {
    case LTFamily::Degenerate: return phi.c();
    case LTFamily::Exponential: return stream.exponential() / phi.rate();
    case LTFamily::Gamma: return stream.gamma(phi.shape()) / phi.rate();
    case LTFamily::PositiveStable: return draw_positive_stable(phi.alpha(), stream);
    case LTFamily::MittagLeffler: return draw_mittag_leffler(phi.alpha(), stream);
  }
  raise(errc::unsupported_mixing_sampler, "no variate sampler for this family");
}

std::int64_t draw_discrete_stable(const DiscreteStableSpec& spec, SeededStream& stream) {
  double mean = std::pow(spec.lambda, 1.0 / spec.alpha) * draw_positive_stable(spec.alpha, stream);
  return stream.poisson(mean);
}

EmpiricalDist sample_discrete_stable(const DiscreteStableSpec& spec, int n, SeededStream& stream) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = static_cast<double>(draw_discrete_stable(spec, stream));
  return EmpiricalDist::from_samples(std::move(v));
}

EmpiricalDist sample_exponential_mixture(const LTSpec& mixing, int n, SeededStream& stream) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = stream.exponential() / draw_mixing(mixing, stream);
  return EmpiricalDist::from_samples(std::move(v));
}

EmpiricalLTCheck empirical_lt_check(const EmpiricalDist& sample, double s, double expected) {
  double sum = 0.0, sumsq = 0.0;
  for (double x : sample.values()) {
    double t = std::exp(-s * x);
    sum += t;
    sumsq += t * t;
  }
  double n = static_cast<double>(sample.count());
  double mean = sum / n;
  double var = std::max(0.0, sumsq / n - mean * mean);
  EmpiricalLTCheck c;
  c.s = s;
  c.empirical = mean;
  c.expected = expected;
  c.sigma = std::sqrt(var / n);
  return c;
}

}  // namespace idlab
