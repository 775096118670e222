// SPDX-License-Identifier: Apache-2.0
#include "idlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace idlab {

namespace {

void check_finite(const std::vector<double>& c) {
  for (double x : c) {
    if (!std::isfinite(x)) raise(errc::invalid_parameter, "series coefficient not finite");
  }
}

}  // namespace

Series::Series(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  check_finite(coeffs_);
}

Series Series::one(int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = 1.0;
  return Series(std::move(c));
}

Series Series::monomial(int k, int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  if (k <= order) c[static_cast<std::size_t>(k)] = 1.0;
  return Series(std::move(c));
}

Series Series::truncated(int order) const {
  std::vector<double> c(coeffs_.begin(),
                        coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), static_cast<std::size_t>(order) + 1));
  c.resize(static_cast<std::size_t>(order) + 1, 0.0);
  return Series(std::move(c));
}

double Series::evaluate(double s) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * s + coeffs_[i];
  return acc;
}

Series operator+(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] + b[i];
  return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] - b[i];
  return Series(std::move(c));
}

Series operator*(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    double ai = a[i];
    if (ai == 0.0) continue;
    for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += ai * b[j];
  }
  return Series(std::move(c));
}

Series operator*(double c, const Series& a) {
  std::vector<double> out(a.coeffs());
  for (double& x : out) x *= c;
  return Series(std::move(out));
}

Series series_log(const Series& q) {
  if (q[0] <= 0.0) raise(errc::zero_constant_term, "series_log: constant term must be positive");
  int n = q.order();
  std::vector<double> l(static_cast<std::size_t>(n) + 1, 0.0);
  l[0] = std::log(q[0]);
  for (int m = 1; m <= n; ++m) {
    // m q_m = sum_{k=1..m} k L_k q_{m-k}; solve for L_m.
    double acc = 0.0;
    for (int k = 1; k < m; ++k) acc += static_cast<double>(k) * l[static_cast<std::size_t>(k)] * q[m - k];
    l[static_cast<std::size_t>(m)] = (q[m] - acc / static_cast<double>(m)) / q[0];
  }
  return Series(std::move(l));
}

Series series_exp(const Series& l) {
  int n = l.order();
  std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
  e[0] = std::exp(l[0]);
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += static_cast<double>(k) * l[k] * e[static_cast<std::size_t>(m - k)];
    e[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
  }
  return Series(std::move(e));
}

Series series_pow(const Series& q, double t) {
  if (q[0] <= 0.0) raise(errc::zero_constant_term, "series_pow: constant term must be positive");
  if (t == 0.0) return Series::one(q.order());
  if (t == 1.0) return q;
  return series_exp(t * series_log(q));
}

Series series_compose(const Series& outer, const Series& inner) {
  if (std::abs(inner[0]) > 1.0 + kCoeffTol)
    raise(errc::invalid_parameter, "series_compose: |inner constant term| must be <= 1");
  int n = std::min(outer.order(), inner.order());
  Series in = inner.truncated(n);
  Series acc = Series::zero(n);
  for (int i = n; i >= 0; --i) {
    acc = acc * in;
    acc[0] += outer[i];
  }
  return acc;
}

Series series_reciprocal(const Series& d) {
  if (d[0] == 0.0) raise(errc::zero_constant_term, "series_reciprocal: constant term is zero");
  int n = d.order();
  std::vector<double> r(static_cast<std::size_t>(n) + 1, 0.0);
  r[0] = 1.0 / d[0];
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += d[k] * r[static_cast<std::size_t>(m - k)];
    r[static_cast<std::size_t>(m)] = -acc / d[0];
  }
  return Series(std::move(r));
}

Series series_divide(const Series& a, const Series& b) {
  if (b[0] == 0.0) raise(errc::zero_constant_term, "series_divide: denominator constant term is zero");
  int n = std::min(a.order(), b.order());
  std::vector<double> r(static_cast<std::size_t>(n) + 1, 0.0);
  for (int m = 0; m <= n; ++m) {
    double acc = a[m];
    for (int k = 1; k <= m; ++k) acc -= b[k] * r[static_cast<std::size_t>(m - k)];
    r[static_cast<std::size_t>(m)] = acc / b[0];
  }
  return Series(std::move(r));
}

Series one_minus_s_pow(double alpha, int order) {
  // (1-s)^alpha = sum binom(alpha, n) (-s)^n.
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = 1.0;
  for (int m = 0; m < order; ++m)
    c[static_cast<std::size_t>(m + 1)] =
        c[static_cast<std::size_t>(m)] * (alpha - static_cast<double>(m)) / static_cast<double>(m + 1) * (-1.0);
  return Series(std::move(c));
}

ProbSeq::ProbSeq(std::vector<double> p, double tail_bound) : p_(std::move(p)), tail_bound_(tail_bound) {
  if (p_.empty()) raise(errc::invalid_pmf, "pmf prefix must be nonempty");
  check_finite(p_);
  for (double x : p_) {
    if (x < 0.0) raise(errc::invalid_pmf, "pmf entry is negative");
  }
  if (tail_bound_ < 0.0) raise(errc::invalid_pmf, "tail bound is negative");
  double total = std::accumulate(p_.begin(), p_.end(), 0.0) + tail_bound_;
  if (std::abs(total - 1.0) > 1e-12) raise(errc::invalid_pmf, "pmf mass plus tail bound does not sum to 1");
}

ProbSeq ProbSeq::from_coefficients(const std::vector<double>& coeffs) {
  std::vector<double> p(coeffs);
  for (double& x : p) {
    if (x < 0.0) {
      if (x < -kCoeffTol) raise(errc::invalid_pmf, "coefficient below nonnegativity tolerance");
      x = 0.0;
    }
  }
  double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (sum > 1.0) {
    if (sum > 1.0 + 1e-10) raise(errc::invalid_pmf, "coefficient mass exceeds 1");
    for (double& x : p) x /= sum;
    sum = 1.0;
  }
  return ProbSeq(std::move(p), 1.0 - sum);
}

ProbSeq ProbSeq::degenerate(int at, int order) {
  std::vector<double> p(static_cast<std::size_t>(order) + 1, 0.0);
  if (at < 0 || at > order) raise(errc::invalid_parameter, "degenerate atom outside truncation window");
  p[static_cast<std::size_t>(at)] = 1.0;
  return ProbSeq(std::move(p), 0.0);
}

double ProbSeq::pgf(double s) const {
  double acc = 0.0;
  for (std::size_t i = p_.size(); i-- > 0;) acc = acc * s + p_[i];
  return acc;
}

double ProbSeq::mean_prefix() const {
  double acc = 0.0;
  for (std::size_t i = 1; i < p_.size(); ++i) acc += static_cast<double>(i) * p_[i];
  return acc;
}

ProbSeq poisson_pmf(double lambda, int order) {
  if (lambda < 0.0) raise(errc::invalid_parameter, "poisson rate must be >= 0");
  std::vector<double> p(static_cast<std::size_t>(order) + 1, 0.0);
  p[0] = std::exp(-lambda);
  for (int n = 0; n < order; ++n)
    p[static_cast<std::size_t>(n + 1)] = p[static_cast<std::size_t>(n)] * lambda / static_cast<double>(n + 1);
  double sum = std::accumulate(p.begin(), p.end(), 0.0);
  return ProbSeq(std::move(p), std::max(0.0, 1.0 - sum));
}

ProbSeq geometric_pmf(double p, int order) {
  if (p <= 0.0 || p > 1.0) raise(errc::invalid_parameter, "geometric parameter must be in (0,1]");
  std::vector<double> m(static_cast<std::size_t>(order) + 1, 0.0);
  double q = 1.0 - p;
  double cur = p;
  for (int n = 0; n <= order; ++n) {
    m[static_cast<std::size_t>(n)] = cur;
    cur *= q;
  }
  double sum = std::accumulate(m.begin(), m.end(), 0.0);
  return ProbSeq(std::move(m), std::max(0.0, 1.0 - sum));
}

ProbSeq negative_binomial_pmf(double t, double p, int order) {
  if (p <= 0.0 || p > 1.0) raise(errc::invalid_parameter, "negative binomial p must be in (0,1]");
  if (t <= 0.0) raise(errc::invalid_parameter, "negative binomial t must be > 0");
  std::vector<double> m(static_cast<std::size_t>(order) + 1, 0.0);
  double q = 1.0 - p;
  m[0] = std::pow(p, t);
  for (int n = 0; n < order; ++n)
    m[static_cast<std::size_t>(n + 1)] =
        m[static_cast<std::size_t>(n)] * (t + static_cast<double>(n)) * q / static_cast<double>(n + 1);
  double sum = std::accumulate(m.begin(), m.end(), 0.0);
  return ProbSeq(std::move(m), std::max(0.0, 1.0 - sum));
}

ProbSeq binomial_pmf(int n, double p) {
  if (n < 0 || p < 0.0 || p > 1.0) raise(errc::invalid_parameter, "bad binomial parameters");
  if (p == 0.0) return ProbSeq::degenerate(0, n);
  if (p == 1.0) return ProbSeq::degenerate(n, n);
  std::vector<double> m(static_cast<std::size_t>(n) + 1, 0.0);
  double q = 1.0 - p;
  m[0] = std::pow(q, n);
  for (int k = 0; k < n; ++k)
    m[static_cast<std::size_t>(k + 1)] =
        m[static_cast<std::size_t>(k)] * static_cast<double>(n - k) / static_cast<double>(k + 1) * (p / q);
  return ProbSeq(std::move(m), 0.0);
}

}  // namespace idlab
