// SPDX-License-Identifier: Apache-2.0
//
// Stochastic-representation generators and the empirical-distance
// diagnostics the simulation modules share. Every sampler is a pure
// function of its SeededStream, so identical (seed, stream_id) reproduce
// identical samples.
#pragma once

#include <functional>
#include <vector>

#include "idlab/dtype_stable.hpp"
#include "idlab/rng.hpp"
#include "idlab/series.hpp"
#include "idlab/transforms.hpp"

namespace idlab {

class EmpiricalDist {
 public:
  static EmpiricalDist from_samples(std::vector<double> values);  // sorts
  const std::vector<double>& values() const { return values_; }
  std::size_t count() const { return values_.size(); }
  // Fraction of samples <= x.
  double cdf(double x) const;

 private:
  std::vector<double> values_;
};

// One-sample Kolmogorov statistic against a CDF evaluator; exact
// step-function computation over the sorted sample.
double ks_distance(const EmpiricalDist& sample, const std::function<double(double)>& cdf);

// Two-sample Kolmogorov statistic.
double ks_distance(const EmpiricalDist& a, const EmpiricalDist& b);

// Draw from the law whose Laplace transform is phi (the mixing law):
// degenerate, exponential and gamma directly; positive stable via the
// Kanter representation; Mittag-Leffler as E^(1/alpha) * stable.
double draw_mixing(const LTSpec& phi, SeededStream& stream);

// One-sided stable with LT exp(-s^alpha); alpha = 1 is the point mass at 1.
double draw_positive_stable(double alpha, SeededStream& stream);
EmpiricalDist sample_positive_stable(double alpha, int n, SeededStream& stream);

// LT 1/(1 + s^alpha).
double draw_mittag_leffler(double alpha, SeededStream& stream);
EmpiricalDist sample_mittag_leffler(double alpha, int n, SeededStream& stream);

// PGF exp(-lambda (1-s)^alpha): Poisson with a stable-mixed mean.
std::int64_t draw_discrete_stable(const DiscreteStableSpec& spec, SeededStream& stream);
EmpiricalDist sample_discrete_stable(const DiscreteStableSpec& spec, int n, SeededStream& stream);

// X = E / W with W from the mixing law; survival P(X > x) = phi(x).
EmpiricalDist sample_exponential_mixture(const LTSpec& mixing, int n, SeededStream& stream);

struct EmpiricalLTCheck {
  double s;
  double empirical;  // mean of exp(-s X)
  double expected;
  double sigma;      // CLT standard error of the mean
};

EmpiricalLTCheck empirical_lt_check(const EmpiricalDist& sample, double s, double expected);

}  // namespace idlab
