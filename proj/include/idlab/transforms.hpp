// SPDX-License-Identifier: Apache-2.0
//
// Parametric Laplace-transform families and the LT <-> PGF bridge
// Q(s) = phi(1 - s). The converse direction is a numerical probe, not a
// proof: complete monotonicity of Q(1-s) is tested through alternating
// divided differences up to a fixed order, with the probe depth recorded.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idlab/series.hpp"

namespace idlab {

enum class LTFamily { Degenerate, Exponential, Gamma, PositiveStable, MittagLeffler };

std::string lt_family_name(LTFamily f);

class LTSpec {
 public:
  static LTSpec degenerate(double c);
  static LTSpec exponential(double rate);
  static LTSpec gamma(double shape, double rate);
  static LTSpec positive_stable(double alpha);
  static LTSpec mittag_leffler(double alpha);

  LTFamily family() const { return family_; }
  double c() const { return a_; }
  double rate() const { return family_ == LTFamily::Gamma ? b_ : a_; }
  double shape() const { return a_; }
  double alpha() const { return a_; }

  // Exact closed-form value; throws negative_argument for s < 0.
  double operator()(double s) const;

  // Mean of the underlying law; +infinity for the heavy-tailed families
  // with alpha < 1.
  double mean() const;

  std::string to_string() const;  // e.g. "gamma:shape=2,rate=1"

 private:
  LTSpec(LTFamily f, double a, double b) : family_(f), a_(a), b_(b) {}
  LTFamily family_;
  double a_ = 0.0;
  double b_ = 0.0;
};

// PGF prefix of Q(s) = phi(1 - s). Every family has an exact coefficient
// route (closed form or series recursion); throws
// coefficient_extraction_failure if a coefficient lands below -kCoeffTol.
ProbSeq pgf_from_lt(const LTSpec& phi, int order);

// A PGF given either as a pmf prefix or as a closed-form evaluator on a
// neighbourhood of [0,1].
class PgfSpec {
 public:
  explicit PgfSpec(ProbSeq pmf);
  PgfSpec(std::function<double(double)> eval, std::string name);

  double operator()(double s) const;
  const std::optional<ProbSeq>& pmf() const { return pmf_; }
  const std::string& name() const { return name_; }

  // Coefficient prefix. pmf-backed specs return their coefficients;
  // evaluator-backed specs go through Chebyshev interpolation on [0,1] and
  // basis conversion, which recovers Taylor coefficients only for
  // evaluators analytic well beyond s = 2 and at modest orders.
  std::vector<double> coefficients(int order) const;

 private:
  std::optional<ProbSeq> pmf_;
  std::function<double(double)> eval_;
  std::string name_;
};

enum class ProbeVerdict { Pass, Fail, Inconclusive };

std::string probe_verdict_name(ProbeVerdict v);

struct CMProbeReport {
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  std::vector<double> grid;    // s values, positive and sorted
  std::vector<double> values;  // Q(1 - s) on the grid
  int probe_depth = 6;         // highest divided-difference order examined
  int worst_order = -1;        // order at which it failed / went inconclusive
  double worst_value = 0.0;
};

// Probes whether Q(1-s) is completely monotone on s > 0, i.e. whether the
// candidate phi(s) = Q(1-s) could be a Laplace transform. Signs required:
// (-1)^k dd_k >= 0 for k = 0..depth. A non-constant candidate whose order-1
// or order-2 differences vanish is refuted outright: a CM function with a
// flat spot is constant.
CMProbeReport lt_candidate_from_pgf(const PgfSpec& q, const std::vector<double>& grid);

// Same machinery for Bernstein functions (nonnegative with completely
// monotone derivative): requires f >= 0 and (-1)^(k-1) dd_k >= 0, k >= 1.
CMProbeReport bernstein_probe(const std::function<double(double)>& f, const std::vector<double>& grid);

}  // namespace idlab
