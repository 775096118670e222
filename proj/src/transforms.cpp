// SPDX-License-Identifier: Apache-2.0
#include "idlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace idlab {

namespace {

std::string fmt_param(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::string lt_family_name(LTFamily f) {
  switch (f) {
    case LTFamily::Degenerate: return "degenerate";
    case LTFamily::Exponential: return "exponential";
    case LTFamily::Gamma: return "gamma";
    case LTFamily::PositiveStable: return "positive_stable";
    case LTFamily::MittagLeffler: return "mittag_leffler";
  }
  return "?";
}

LTSpec LTSpec::degenerate(double c) {
  if (!(c > 0.0)) raise(errc::invalid_parameter, "degenerate: c must be > 0");
  return LTSpec(LTFamily::Degenerate, c, 0.0);
}

LTSpec LTSpec::exponential(double rate) {
  if (!(rate > 0.0)) raise(errc::invalid_parameter, "exponential: rate must be > 0");
  return LTSpec(LTFamily::Exponential, rate, 0.0);
}

LTSpec LTSpec::gamma(double shape, double rate) {
  if (!(shape > 0.0)) raise(errc::invalid_parameter, "gamma: shape must be > 0");
  if (!(rate > 0.0)) raise(errc::invalid_parameter, "gamma: rate must be > 0");
  return LTSpec(LTFamily::Gamma, shape, rate);
}

LTSpec LTSpec::positive_stable(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) raise(errc::invalid_parameter, "positive_stable: alpha must be in (0,1]");
  return LTSpec(LTFamily::PositiveStable, alpha, 0.0);
}

LTSpec LTSpec::mittag_leffler(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) raise(errc::invalid_parameter, "mittag_leffler: alpha must be in (0,1]");
  return LTSpec(LTFamily::MittagLeffler, alpha, 0.0);
}

double LTSpec::operator()(double s) const {
  if (s < 0.0) raise(errc::negative_argument, "LT argument must be >= 0");
  switch (family_) {
    case LTFamily::Degenerate: return std::exp(-a_ * s);
    case LTFamily::Exponential: return a_ / (a_ + s);
    case LTFamily::Gamma: return std::pow(b_ / (b_ + s), a_);
    case LTFamily::PositiveStable: return std::exp(-std::pow(s, a_));
    case LTFamily::MittagLeffler: return 1.0 / (1.0 + std::pow(s, a_));
  }
  return 0.0;
}

double LTSpec::mean() const {
  switch (family_) {
    case LTFamily::Degenerate: return a_;
    case LTFamily::Exponential: return 1.0 / a_;
    case LTFamily::Gamma: return a_ / b_;
    case LTFamily::PositiveStable: return a_ == 1.0 ? 1.0 : std::numeric_limits<double>::infinity();
    case LTFamily::MittagLeffler: return a_ == 1.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

std::string LTSpec::to_string() const {
  switch (family_) {
    case LTFamily::Degenerate: return "degenerate:c=" + fmt_param(a_);
    case LTFamily::Exponential: return "exponential:rate=" + fmt_param(a_);
    case LTFamily::Gamma: return "gamma:shape=" + fmt_param(a_) + ",rate=" + fmt_param(b_);
    case LTFamily::PositiveStable: return "positive_stable:alpha=" + fmt_param(a_);
    case LTFamily::MittagLeffler: return "mittag_leffler:alpha=" + fmt_param(a_);
  }
  return "?";
}

ProbSeq pgf_from_lt(const LTSpec& phi, int order) {
  if (order < 1) raise(errc::invalid_parameter, "pgf_from_lt: order must be >= 1");
  try {
    switch (phi.family()) {
      case LTFamily::Degenerate:
        // exp(-c(1-s)): Poisson(c).
        return poisson_pmf(phi.c(), order);
      case LTFamily::Exponential:
        // rate/(rate+1-s): geometric with success rate/(1+rate).
        return geometric_pmf(phi.rate() / (1.0 + phi.rate()), order);
      case LTFamily::Gamma:
        // (rate/(rate+1-s))^shape: negative binomial.
        return negative_binomial_pmf(phi.shape(), phi.rate() / (1.0 + phi.rate()), order);
      case LTFamily::PositiveStable: {
        Series l = -1.0 * one_minus_s_pow(phi.alpha(), order);
        return ProbSeq::from_coefficients(series_exp(l).coeffs());
      }
      case LTFamily::MittagLeffler: {
        Series d = one_minus_s_pow(phi.alpha(), order);
        d[0] += 1.0;
        return ProbSeq::from_coefficients(series_reciprocal(d).coeffs());
      }
    }
  } catch (const Error& e) {
    raise(errc::coefficient_extraction_failure, std::string("pgf_from_lt: ") + e.what());
  }
  raise(errc::coefficient_extraction_failure, "pgf_from_lt: unknown family");
}

PgfSpec::PgfSpec(ProbSeq pmf) : pmf_(std::move(pmf)), name_("pmf") {
  const ProbSeq& q = *pmf_;
  eval_ = [q](double s) { return q.pgf(s); };
}

PgfSpec::PgfSpec(std::function<double(double)> eval, std::string name)
    : eval_(std::move(eval)), name_(std::move(name)) {}

double PgfSpec::operator()(double s) const { return eval_(s); }

std::vector<double> PgfSpec::coefficients(int order) const {
  if (pmf_) {
    std::vector<double> c(pmf_->p());
    c.resize(static_cast<std::size_t>(order) + 1, 0.0);
    return c;
  }
  // Chebyshev interpolation on Lobatto nodes mapped to [0,1] (the cosine
  // quadrature solves the node Vandermonde system exactly), then
  // conversion to monomials. The conversion grows like (3+2*sqrt(8))^k, so
  // Taylor coefficients are recoverable only while the evaluator is
  // analytic well beyond s = 2; pmf-backed specs bypass all of this.
  const int n = 128;
  const double pi = 3.141592653589793238462643383280;
  std::vector<double> vs(n + 1);
  for (int j = 0; j <= n; ++j) {
    double x = 0.5 * (1.0 + std::cos(pi * j / n));
    vs[static_cast<std::size_t>(j)] = eval_(x);
    if (!std::isfinite(vs[static_cast<std::size_t>(j)]))
      raise(errc::coefficient_extraction_failure, "evaluator returned non-finite value");
  }
  std::size_t cols = static_cast<std::size_t>(order) + 1;
  std::vector<double> cheb(cols, 0.0);
  for (std::size_t k = 0; k < cols; ++k) {
    double acc = 0.5 * (vs[0] + (k % 2 == 0 ? vs[static_cast<std::size_t>(n)] : -vs[static_cast<std::size_t>(n)]));
    for (int j = 1; j < n; ++j)
      acc += vs[static_cast<std::size_t>(j)] * std::cos(pi * static_cast<double>(k) * j / n);
    cheb[k] = 2.0 * acc / n;
  }
  cheb[0] *= 0.5;
  // Chebyshev -> monomial in x via T_{k+1}(2x-1) = 2(2x-1) T_k - T_{k-1}.
  std::vector<double> mono(cols, 0.0);
  std::vector<double> tprev(cols, 0.0), tcur(cols, 0.0);
  tprev[0] = 1.0;
  if (cols > 1) {
    tcur[0] = -1.0;
    tcur[1] = 2.0;
  }
  mono[0] += cheb[0] * tprev[0];
  if (cols > 1)
    for (std::size_t i = 0; i < cols; ++i) mono[i] += cheb[1] * tcur[i];
  for (std::size_t k = 2; k < cols; ++k) {
    std::vector<double> tnext(cols, 0.0);
    for (std::size_t i = 0; i < cols; ++i) {
      double v = -2.0 * tcur[i] - tprev[i];
      if (i > 0) v += 4.0 * tcur[i - 1];
      tnext[i] = v;
    }
    for (std::size_t i = 0; i < cols; ++i) mono[i] += cheb[k] * tnext[i];
    tprev = std::move(tcur);
    tcur = std::move(tnext);
  }
  return mono;
}

std::string probe_verdict_name(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Pass: return "PASS";
    case ProbeVerdict::Fail: return "FAIL";
    case ProbeVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

// Alternating-divided-difference probe shared by the CM and Bernstein
// checks. `sign_at(k)` gives the required sign of dd_k; order 0 checks the
// values themselves when sign_at(0) != 0.
CMProbeReport alternating_probe(const std::vector<double>& grid, const std::vector<double>& values,
                                double value_slack, int depth,
                                const std::function<int(int)>& sign_at) {
  CMProbeReport rep;
  rep.grid = grid;
  rep.values = values;
  rep.probe_depth = depth;
  std::size_t m = grid.size();
  if (m < static_cast<std::size_t>(depth) + 1)
    raise(errc::invalid_parameter, "probe grid too small for requested depth");

  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::abs(v));
  double base_err = 4e-16 * std::max(vmax, 1.0) + value_slack;

  // Constant candidates are fine (the transform of a point mass at 0).
  double range = 0.0;
  for (double v : values) range = std::max(range, std::abs(v - values[0]));
  if (range <= 16.0 * base_err) {
    rep.verdict = (sign_at(0) != 0 && values[0] < -base_err) ? ProbeVerdict::Fail : ProbeVerdict::Pass;
    if (rep.verdict == ProbeVerdict::Fail) {
      rep.worst_order = 0;
      rep.worst_value = values[0];
    }
    return rep;
  }

  bool inconclusive = false;
  std::vector<double> dd(values);
  std::vector<double> err(m, base_err);

  for (int k = 0; k <= depth; ++k) {
    if (k > 0) {
      std::size_t len = m - static_cast<std::size_t>(k);
      for (std::size_t j = 0; j < len; ++j) {
        double span = grid[j + static_cast<std::size_t>(k)] - grid[j];
        dd[j] = (dd[j + 1] - dd[j]) / span;
        err[j] = (err[j + 1] + err[j]) / span;
      }
      dd.resize(len);
      err.resize(len);
    }
    int want = sign_at(k);
    if (want == 0) continue;
    for (std::size_t j = 0; j < dd.size(); ++j) {
      double signed_val = want * dd[j];
      if (signed_val < -err[j]) {
        rep.verdict = ProbeVerdict::Fail;
        rep.worst_order = k;
        rep.worst_value = dd[j];
        return rep;
      }
      if (k >= 1 && std::abs(dd[j]) <= err[j]) {
        // Window is numerically flat at order k. If the underlying values
        // still vary across it, a completely monotone candidate is ruled
        // out at orders 1-2 (a CM function with a flat derivative is
        // constant); higher orders cannot be certified either way.
        double lo = values[j], hi = values[j];
        for (std::size_t i = j; i <= j + static_cast<std::size_t>(k); ++i) {
          lo = std::min(lo, values[i]);
          hi = std::max(hi, values[i]);
        }
        if (hi - lo > 1e3 * static_cast<double>(k + 1) * base_err) {
          if (k <= 2) {
            rep.verdict = ProbeVerdict::Fail;
            rep.worst_order = k;
            rep.worst_value = dd[j];
            return rep;
          }
          if (!inconclusive) {
            inconclusive = true;
            rep.worst_order = k;
            rep.worst_value = dd[j];
          }
        }
      }
    }
  }
  rep.verdict = inconclusive ? ProbeVerdict::Inconclusive : ProbeVerdict::Pass;
  return rep;
}

}  // namespace

CMProbeReport lt_candidate_from_pgf(const PgfSpec& q, const std::vector<double>& grid) {
  if (grid.empty()) raise(errc::invalid_parameter, "probe grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0.0) raise(errc::invalid_parameter, "probe grid points must be > 0");
    if (i > 0 && grid[i] <= grid[i - 1]) raise(errc::invalid_parameter, "probe grid must be sorted");
  }
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = q(1.0 - grid[i]);
  double slack = q.pmf() ? q.pmf()->tail_bound() : 0.0;
  // CM: (-1)^k dd_k >= 0, order 0 included.
  return alternating_probe(grid, values, slack, 6, [](int k) { return (k % 2 == 0) ? 1 : -1; });
}

CMProbeReport bernstein_probe(const std::function<double(double)>& f, const std::vector<double>& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);
  // Bernstein: f >= 0 and derivative CM, i.e. (-1)^(k-1) dd_k >= 0 for k >= 1.
  return alternating_probe(grid, values, 0.0, 7, [](int k) {
    if (k == 0) return 1;
    return (k % 2 == 1) ? 1 : -1;
  });
}

}  // namespace idlab
