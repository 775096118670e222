// SPDX-License-Identifier: Apache-2.0
#include "idlab/dtype_stable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace idlab {

namespace {

Series bernoulli_series(double c, int order) {
  Series b = Series::zero(order);
  b[0] = 1.0 - c;
  if (order >= 1) b[1] = c;
  return b;
}

}  // namespace

ProbSeq thin(const ProbSeq& q, ThinningParam c) {
  if (c.value() == 1.0) return q;
  Series composed = series_compose(q.to_series(), bernoulli_series(c.value(), q.order()));
  return ProbSeq::from_coefficients(composed.coeffs());
}

DTypeCheck same_dtype(const ProbSeq& q1, const ProbSeq& q2, ThinningParam c) {
  DTypeCheck out;
  out.tolerance = 1e-8 + q1.tail_bound() + q2.tail_bound();
  for (int i = 1; i <= 19; ++i) {
    double u = 0.05 * i;
    double dev = std::abs(q1.pgf(u) - q2.pgf(1.0 - c.value() + c.value() * u));
    out.max_deviation = std::max(out.max_deviation, dev);
  }
  out.same = out.max_deviation < out.tolerance;
  return out;
}

double DiscreteStableSpec::pgf(double s) const { return std::exp(-lambda * std::pow(1.0 - s, alpha)); }

ProbSeq discrete_stable_pmf(const DiscreteStableSpec& spec, int order) {
  Series l = -spec.lambda * one_minus_s_pow(spec.alpha, order);
  return ProbSeq::from_coefficients(series_exp(l).coeffs());
}

double stability_identity_check(const DiscreteStableSpec& spec, int n) {
  if (n < 2) raise(errc::invalid_parameter, "n must be >= 2");
  double scale = std::pow(static_cast<double>(n), -1.0 / spec.alpha);
  double dev = 0.0;
  for (int i = 0; i <= 20; ++i) {
    double s = 0.05 * i;
    double lhs = std::pow(spec.pgf(1.0 - scale * (1.0 - s)), n);
    dev = std::max(dev, std::abs(lhs - spec.pgf(s)));
  }
  return dev;
}

DOAReport domain_of_attraction_check(const LTSpec& phi, double alpha, const std::vector<int>& n_list,
                                     double norm_scale) {
  if (!(alpha > 0.0) || alpha > 1.0) raise(errc::invalid_parameter, "alpha must be in (0,1]");
  if (n_list.empty()) raise(errc::invalid_parameter, "n list is empty");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1]) raise(errc::invalid_parameter, "n list must be increasing");

  DOAReport rep;
  rep.n = n_list;
  if (norm_scale > 0.0) {
    rep.norm_scale = norm_scale;
  } else if (alpha == 1.0 && std::isfinite(phi.mean())) {
    rep.norm_scale = phi.mean();
  } else {
    rep.norm_scale = 1.0;
  }

  for (int n : n_list) {
    double a_n = rep.norm_scale * std::pow(static_cast<double>(n), 1.0 / alpha);
    double dev = 0.0;
    for (int i = 0; i < 20; ++i) {
      double s = 0.05 * i;
      double lhs = -static_cast<double>(n) * std::log(phi((1.0 - s) / a_n));
      dev = std::max(dev, std::abs(lhs - std::pow(1.0 - s, alpha)));
    }
    rep.deviation.push_back(dev);
  }
  rep.pass = rep.deviation.back() < 0.01;
  for (std::size_t i = 1; i < rep.deviation.size(); ++i)
    if (rep.deviation[i] > rep.deviation[i - 1] * (1.0 + 1e-9) + 1e-12) rep.pass = false;
  return rep;
}

SelfDecompReport discrete_selfdecomposable_check(const ProbSeq& q, const std::vector<double>& c_grid) {
  if (q.p(0) <= 1e-14) raise(errc::zero_at_origin, "self-decomposability test needs p_0 > 0");
  SelfDecompReport rep;
  rep.c_grid = c_grid;
  rep.pass = true;
  rep.worst_value = std::numeric_limits<double>::infinity();
  // The ratio expansion continues past the pmf's own degree (where short
  // pmfs show their sign violations), so pad the working order, but only
  // when the tail bound says the trailing zeros are real.
  int order = q.tail_bound() < 1e-12 ? std::max(q.order(), kDefaultOrder) : q.order();
  Series num = q.to_series().truncated(order);
  for (double c : c_grid) {
    if (!(c > 0.0) || c >= 1.0) raise(errc::invalid_parameter, "c grid values must be in (0,1)");
    Series den = series_compose(num, bernoulli_series(c, order));
    Series ratio = series_divide(num, den);
    for (int i = 0; i <= ratio.order(); ++i) {
      if (ratio[i] < rep.worst_value) {
        rep.worst_value = ratio[i];
        rep.worst_index = i;
        rep.worst_c = c;
      }
    }
  }
  if (rep.worst_value < -1e-10) rep.pass = false;
  return rep;
}

std::vector<double> default_c_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 9; ++i) g.push_back(0.1 * i);
  return g;
}

}  // namespace idlab
