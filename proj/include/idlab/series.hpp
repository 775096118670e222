// SPDX-License-Identifier: Apache-2.0
//
// Truncated real power-series arithmetic. A Series holds coefficients
// c_0..c_N; binary operations truncate to the shorter operand. ProbSeq is
// the probability-mass specialization used throughout the library: a pmf
// prefix on {0,1,2,...} plus an explicit bound on the mass beyond it.
#pragma once

#include <cstddef>
#include <vector>

#include "idlab/error.hpp"

namespace idlab {

// Absolute tolerance below which a computed coefficient still counts as
// nonnegative; keeps rounding from flipping verdicts on exact cases.
inline constexpr double kCoeffTol = 1e-12;

// Default truncation degree for PGF prefixes.
inline constexpr int kDefaultOrder = 64;

class Series {
 public:
  Series() : coeffs_(1, 0.0) {}
  explicit Series(std::vector<double> coeffs);
  static Series zero(int order) { return Series(std::vector<double>(order + 1, 0.0)); }
  static Series one(int order);
  // The monomial s^k truncated at `order`.
  static Series monomial(int k, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  Series truncated(int order) const;
  double evaluate(double s) const;  // Horner

 private:
  std::vector<double> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);  // Cauchy product, min order
Series operator*(double c, const Series& a);

// log q as a series; requires q_0 > 0. Uses the recursion
// n q_n = sum_{k=1..n} k L_k q_{n-k}.
Series series_log(const Series& q);

// exp l as a series; the dual recursion n E_n = sum_{k=1..n} k l_k E_{n-k}.
Series series_exp(const Series& l);

// q^t = exp(t log q) for real t; requires q_0 > 0.
Series series_pow(const Series& q, double t);

// outer(inner(s)) truncated to the shorter order; requires |inner_0| <= 1.
Series series_compose(const Series& outer, const Series& inner);

// 1/d; requires d_0 != 0.
Series series_reciprocal(const Series& d);

// a/b via the division recursion; requires b_0 != 0.
Series series_divide(const Series& a, const Series& b);

// (1 - s)^alpha as a binomial series.
Series one_minus_s_pow(double alpha, int order);

// A truncated pmf on {0,1,2,...}: p_0..p_N plus the mass beyond index N.
class ProbSeq {
 public:
  ProbSeq(std::vector<double> p, double tail_bound);

  // Builds from raw series coefficients: entries in [-kCoeffTol, 0) are
  // clamped to zero, a sum overshooting 1 by <= 1e-10 is rescaled, and the
  // tail bound is set to the missing mass. Throws invalid_pmf otherwise.
  static ProbSeq from_coefficients(const std::vector<double>& coeffs);
  static ProbSeq degenerate(int at, int order);

  const std::vector<double>& p() const { return p_; }
  double p(int i) const { return p_[static_cast<std::size_t>(i)]; }
  double tail_bound() const { return tail_bound_; }
  int order() const { return static_cast<int>(p_.size()) - 1; }

  Series to_series() const { return Series(p_); }
  // PGF prefix value sum p_i s^i; the true PGF differs by at most
  // tail_bound for s in [0,1].
  double pgf(double s) const;
  double mean_prefix() const;

 private:
  ProbSeq() = default;
  std::vector<double> p_;
  double tail_bound_ = 0.0;
};

// Common closed-form pmf prefixes (test and CLI building blocks).
ProbSeq poisson_pmf(double lambda, int order);
ProbSeq geometric_pmf(double p, int order);                    // on I_0: p q^n
ProbSeq negative_binomial_pmf(double t, double p, int order);  // (p/(1-qs))^t
ProbSeq binomial_pmf(int n, double p);

}  // namespace idlab
