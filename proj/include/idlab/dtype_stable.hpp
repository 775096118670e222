// SPDX-License-Identifier: Apache-2.0
//
// Binomial thinning (the lattice substitute for scalar multiplication),
// D-types, discrete stable laws exp(-lambda (1-s)^alpha), and discrete
// self-decomposability.
#pragma once

#include <vector>

#include "idlab/series.hpp"
#include "idlab/transforms.hpp"

namespace idlab {

class ThinningParam {
 public:
  explicit ThinningParam(double c) : c_(c) {
    if (!(c > 0.0) || c > 1.0) raise(errc::invalid_parameter, "thinning parameter must be in (0,1]");
  }
  double value() const { return c_; }

 private:
  double c_;
};

// c o X: composes the PGF with the Bernoulli PGF 1 - c + c s.
ProbSeq thin(const ProbSeq& q, ThinningParam c);

struct DTypeCheck {
  bool same = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
};

// Same D-type test: sup over a u-grid of |Q1(u) - Q2(1 - c + c u)|, against
// 1e-8 plus the two tail bounds.
DTypeCheck same_dtype(const ProbSeq& q1, const ProbSeq& q2, ThinningParam c);

struct DiscreteStableSpec {
  double alpha;
  double lambda;
  DiscreteStableSpec(double alpha_, double lambda_) : alpha(alpha_), lambda(lambda_) {
    if (!(alpha > 0.0) || alpha > 1.0) raise(errc::invalid_parameter, "alpha must be in (0,1]");
    if (!(lambda > 0.0)) raise(errc::invalid_parameter, "lambda must be > 0");
  }
  double pgf(double s) const;  // exp(-lambda (1-s)^alpha)
};

ProbSeq discrete_stable_pmf(const DiscreteStableSpec& spec, int order);

// Max deviation of Q(1 - n^(-1/alpha)(1-s))^n from Q(s) on an s-grid; the
// closed form makes this an exact identity, so anything above rounding is
// a bug.
double stability_identity_check(const DiscreteStableSpec& spec, int n);

struct DOAReport {
  std::vector<int> n;
  std::vector<double> deviation;  // sup-grid |-n log phi((1-s)/a_n) - (1-s)^alpha|
  double norm_scale = 1.0;        // a_n = norm_scale * n^(1/alpha)
  bool pass = false;              // nonincreasing and final < 0.01
};

// Checks attraction of phi's law to the discrete stable exponent
// (1-s)^alpha under the norming a_n = scale * n^(1/alpha). By default the
// scale absorbs the mean when alpha = 1 and the mean is finite.
DOAReport domain_of_attraction_check(const LTSpec& phi, double alpha, const std::vector<int>& n_list,
                                     double norm_scale = 0.0);

struct SelfDecompReport {
  bool pass = false;
  double worst_c = 0.0;
  int worst_index = -1;
  double worst_value = 0.0;
  std::vector<double> c_grid;
};

// Discrete class-L test: Q(s)/Q(1-c+cs) must have nonnegative coefficients
// for every c; the ratio is computed by series division (the denominator
// constant term Q(1-c) is positive), which keeps the sign test sharp.
SelfDecompReport discrete_selfdecomposable_check(const ProbSeq& q, const std::vector<double>& c_grid);

std::vector<double> default_c_grid();  // {0.1, 0.2, ..., 0.9}

}  // namespace idlab
