// SPDX-License-Identifier: Apache-2.0
#include "idlab/divisibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace idlab {

namespace {

constexpr double kAtomTol = 1e-14;

}  // namespace

std::string id_verdict_name(IdVerdict v) {
  switch (v) {
    case IdVerdict::ID: return "ID";
    case IdVerdict::NotIdZeroAtOrigin: return "NotID_ZeroAtOrigin";
    case IdVerdict::NotIdFiniteSupport: return "NotID_FiniteSupport";
    case IdVerdict::NotIdNegativeCoefficient: return "NotID_NegativeCoefficient";
    case IdVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool verdict_is_id(IdVerdict v) { return v == IdVerdict::ID; }

Decomposition compound_poisson_decompose(const ProbSeq& q) {
  Decomposition d;
  if (q.p(0) <= kAtomTol) {
    d.verdict = IdVerdict::NotIdZeroAtOrigin;
    return d;
  }

  int last_support = -1;
  int support_points = 0;
  for (int i = 0; i <= q.order(); ++i) {
    if (q.p(i) > kAtomTol) {
      last_support = i;
      ++support_points;
    }
  }
  // Finite support is claimed only when the data shows it: negligible tail
  // bound and exact zeros after the last support point. Positive entries
  // below the atom tolerance (a decaying prefix, e.g. a Poisson law) are
  // evidence of continuing support, not of finiteness.
  bool trailing_zero = true;
  for (int i = last_support + 1; i <= q.order(); ++i)
    if (q.p(i) != 0.0) trailing_zero = false;
  bool finite_support = q.tail_bound() < kAtomTol && trailing_zero && support_points >= 2;

  // Log-coefficient test. Runs even for finite-support inputs so the
  // refutation carries a concrete negative coefficient when there is one.
  Series l = series_log(q.to_series());
  double lambda = -l[0];
  std::optional<int> neg_index;
  double neg_value = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  std::vector<double> a(static_cast<std::size_t>(q.order()) + 1, 0.0);
  if (lambda > kAtomTol) {
    for (int k = 1; k <= q.order(); ++k) {
      a[static_cast<std::size_t>(k)] = l[k] / lambda;
      margin = std::min(margin, a[static_cast<std::size_t>(k)]);
      if (!neg_index && a[static_cast<std::size_t>(k)] < -kCoeffTol) {
        neg_index = k;
        neg_value = a[static_cast<std::size_t>(k)];
      }
    }
  } else {
    // Degenerate at 0: rate 0, nothing to compound.
    margin = 0.0;
  }
  d.min_margin = std::isfinite(margin) ? margin : 0.0;

  if (finite_support) {
    d.verdict = IdVerdict::NotIdFiniteSupport;
    if (neg_index) {
      d.witness_index = neg_index;
      d.witness_value = neg_value;
    }
    return d;
  }
  if (neg_index) {
    d.verdict = IdVerdict::NotIdNegativeCoefficient;
    d.witness_index = neg_index;
    d.witness_value = neg_value;
    return d;
  }

  d.verdict = IdVerdict::ID;
  d.rate = lambda > kAtomTol ? lambda : 0.0;
  if (lambda > kAtomTol) {
    for (double& x : a) x = std::max(0.0, x);
    a[0] = 0.0;
    double sum = std::accumulate(a.begin(), a.end(), 0.0);
    if (sum > 1.0) {
      for (double& x : a) x /= sum;
      sum = 1.0;
    }
    d.compounding = ProbSeq(std::move(a), 1.0 - sum);
  } else {
    d.compounding = ProbSeq::degenerate(1, q.order());
  }
  return d;
}

ProbSeq recombine(const Decomposition& d, int order) {
  if (!verdict_is_id(d.verdict) || !d.rate || !d.compounding)
    raise(errc::not_applicable, "recombine requires an ID decomposition");
  Series a = d.compounding->to_series().truncated(order);
  Series l = *d.rate * a;
  l[0] -= *d.rate;
  return ProbSeq::from_coefficients(series_exp(l).coeffs());
}

RootResult nth_root_component(const ProbSeq& q, int n) {
  if (n < 2) raise(errc::invalid_parameter, "root index must be >= 2");
  if (q.p(0) <= kAtomTol) raise(errc::zero_at_origin, "no integer-valued root: zero mass at the origin");
  Series root = series_pow(q.to_series(), 1.0 / static_cast<double>(n));
  RootResult r;
  for (int i = 0; i <= root.order(); ++i) {
    if (root[i] < -kCoeffTol) {
      r.witness_index = i;
      r.witness_value = root[i];
      return r;
    }
  }
  r.component = ProbSeq::from_coefficients(root.coeffs());
  return r;
}

SupportProfile support_profile(const ProbSeq& q, double threshold) {
  if (!(threshold > 0.0) || threshold >= 1.0) raise(errc::invalid_parameter, "threshold must be in (0,1)");
  SupportProfile sp;
  int last = -1;
  for (int i = 0; i <= q.order(); ++i) {
    if (q.p(i) > threshold) {
      if (last >= 0 && i > last + 1) sp.gaps.emplace_back(last + 1, i - last - 1);
      sp.support_indices.push_back(i);
      last = i;
    }
  }
  bool trailing_zero = true;
  for (int i = last + 1; i <= q.order(); ++i)
    if (q.p(i) != 0.0) trailing_zero = false;
  sp.finite = q.tail_bound() < threshold && trailing_zero;
  return sp;
}

SupportCheck component_support_check(const ProbSeq& q, int n) {
  Decomposition d = compound_poisson_decompose(q);
  if (!verdict_is_id(d.verdict))
    raise(errc::not_applicable, "support comparison requires an ID law, got " + id_verdict_name(d.verdict));
  RootResult root = nth_root_component(q, n);
  if (!root.component) raise(errc::not_applicable, "ID law has no nonnegative root prefix");

  const double threshold = 1e-12;
  SupportProfile sq = support_profile(q, threshold);
  SupportProfile sc = support_profile(*root.component, threshold);

  SupportCheck out;
  out.input_support = sq.support_indices;
  out.component_support = sc.support_indices;
  // Truncation makes the two prefixes fade below threshold at different
  // indices; compare only where both are still visible.
  int limit = std::min(sq.support_indices.empty() ? -1 : sq.support_indices.back(),
                       sc.support_indices.empty() ? -1 : sc.support_indices.back());
  auto prefix = [limit](const std::vector<int>& v) {
    std::vector<int> out;
    for (int i : v)
      if (i <= limit) out.push_back(i);
    return out;
  };
  out.coincide = prefix(sq.support_indices) == prefix(sc.support_indices);
  return out;
}

ProbSeq lattice_negbin_pmf(double p, int k, double t, int order, bool shifted) {
  if (!(p > 0.0) || p >= 1.0) raise(errc::invalid_parameter, "p must be in (0,1)");
  if (k < 2) raise(errc::invalid_parameter, "lattice step k must be >= 2");
  if (t < 0.0) raise(errc::invalid_parameter, "t must be >= 0");
  // (p/(1 - q s^k))^t: geometric in s^k raised to the t.
  std::vector<double> base(static_cast<std::size_t>(order) + 1, 0.0);
  double q = 1.0 - p;
  double cur = p;
  for (int m = 0; m * k <= order; ++m) {
    base[static_cast<std::size_t>(m * k)] = cur;
    cur *= q;
  }
  Series s = series_pow(Series(std::move(base)), t);
  std::vector<double> c = s.coeffs();
  if (shifted) {
    c.insert(c.begin(), 0.0);
    c.pop_back();
  }
  return ProbSeq::from_coefficients(c);
}

}  // namespace idlab
