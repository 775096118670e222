// SPDX-License-Identifier: Apache-2.0
#include "idlab/max_random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "idlab/random_sums.hpp"
#include "idlab/samplers.hpp"
#include "idlab/tolerances.hpp"

namespace idlab {

DTypeVsLatticeReport dtype_vs_lattice_report() {
  DTypeVsLatticeReport r;
  r.s = {0.0, 0.25, 0.5, 0.75};
  for (std::size_t i = 0; i < 4; ++i) {
    double s = r.s[i];
    r.qx[i] = 3.0 / (4.0 - s);
    r.qy[i] = 1.0 / (2.0 - s);
    r.qx_thin[i] = 6.0 / (7.0 - s);  // Q_X(1/2 + s/2)
    r.qy_thin[i] = 2.0 / (3.0 - s);  // Q_Y(1/2 + s/2)
  }
  r.dev_at_zero = std::abs(r.qx[0] - r.qy_thin[0]);
  // Sup over a finer grid than the table.
  for (int i = 0; i <= 19; ++i) {
    double s = 0.05 * i;
    r.sup_dev_x_vs_ythin = std::max(r.sup_dev_x_vs_ythin, std::abs(3.0 / (4.0 - s) - 2.0 / (3.0 - s)));
    r.sup_dev_y_vs_xthin = std::max(r.sup_dev_y_vs_xthin, std::abs(1.0 / (2.0 - s) - 6.0 / (7.0 - s)));
  }
  r.distinct = r.sup_dev_x_vs_ythin > 0.01 && r.sup_dev_y_vs_xthin > 0.01;
  return r;
}

LatticeDfPair lattice_dtype_pair(const LTSpec& m, double alpha, int kmax) {
  if (!(alpha > 0.0)) raise(errc::invalid_parameter, "alpha must be > 0");
  if (kmax < 0) raise(errc::invalid_parameter, "kmax must be >= 0");
  LatticeDfPair out;
  for (int k = 0; k <= kmax; ++k) {
    out.f.push_back(1.0 - m(static_cast<double>(k)));
    out.g.push_back(1.0 - m(alpha * static_cast<double>(k)));
  }
  return out;
}

namespace {

double pareto_like_survival(double x, double a) { return x <= 0.0 ? 1.0 : 1.0 / (1.0 + std::pow(x, a)); }

double logistic_cdf(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

GeoStabilityReport geo_extreme_stability_check(const MaxStabilityCase& c, int samples, std::uint64_t seed) {
  if (!(c.p > 0.0) || c.p >= 1.0) raise(errc::invalid_parameter, "geometric p must be in (0,1)");
  GeoStabilityReport rep;
  rep.samples = samples;
  rep.seed = seed;
  const Tolerances& tol = Tolerances::active();
  SeededStream stream(seed, 0);
  double p = c.p, q = 1.0 - c.p;

  switch (c.kind) {
    case MaxCaseKind::ParetoMin: {
      // Identity: p S(x) / (1 - q S(x)) = S(x p^(-1/a)).
      for (int i = 1; i <= 100; ++i) {
        double x = 0.1 * i;
        double s = pareto_like_survival(x, c.a);
        double lhs = p * s / (1.0 - q * s);
        double rhs = pareto_like_survival(x * std::pow(p, -1.0 / c.a), c.a);
        rep.grid_deviation = std::max(rep.grid_deviation, std::abs(lhs - rhs));
      }
      double rescale = std::pow(p, -1.0 / c.a);
      std::vector<double> v(static_cast<std::size_t>(samples));
      for (double& x : v) {
        std::int64_t n = stream.geometric_positive(p);
        double mn = std::numeric_limits<double>::infinity();
        for (std::int64_t i = 0; i < n; ++i) {
          double u = stream.uniform();
          mn = std::min(mn, std::pow((1.0 - u) / u, 1.0 / c.a));
        }
        x = mn * rescale;
      }
      double a = c.a;
      rep.ks = ks_distance(EmpiricalDist::from_samples(std::move(v)),
                           [a](double x) { return 1.0 - pareto_like_survival(x, a); });
      rep.pass = rep.grid_deviation < 1e-12 && rep.ks < tol.ks_max;
      return rep;
    }
    case MaxCaseKind::LogisticMax: {
      // Identity: p F(x) / (1 - q F(x)) = F(x + log p).
      for (int i = -50; i <= 50; ++i) {
        double x = 0.1 * i;
        double f = logistic_cdf(x);
        double lhs = p * f / (1.0 - q * f);
        rep.grid_deviation = std::max(rep.grid_deviation, std::abs(lhs - logistic_cdf(x + std::log(p))));
      }
      double shift = std::log(p);
      std::vector<double> v(static_cast<std::size_t>(samples));
      for (double& x : v) {
        std::int64_t n = stream.geometric_positive(p);
        double mx = -std::numeric_limits<double>::infinity();
        for (std::int64_t i = 0; i < n; ++i) {
          double u = stream.uniform();
          mx = std::max(mx, std::log(u / (1.0 - u)));
        }
        x = mx + shift;
      }
      rep.ks = ks_distance(EmpiricalDist::from_samples(std::move(v)), logistic_cdf);
      rep.pass = rep.grid_deviation < 1e-12 && rep.ks < tol.ks_max;
      return rep;
    }
    case MaxCaseKind::ExponentialGeoMin: {
      // Negative control: the geometric minimum p e^-x / (1 - q e^-x) is
      // not the exponential survival, and no rescaling fixes the shape.
      rep.negative_control = true;
      for (int i = 1; i <= 100; ++i) {
        double x = 0.1 * i;
        double s = std::exp(-x);
        rep.grid_deviation = std::max(rep.grid_deviation, std::abs(p * s / (1.0 - q * s) - s));
      }
      std::vector<double> v(static_cast<std::size_t>(samples));
      for (double& x : v) {
        std::int64_t n = stream.geometric_positive(p);
        double mn = std::numeric_limits<double>::infinity();
        for (std::int64_t i = 0; i < n; ++i) mn = std::min(mn, stream.exponential());
        x = mn;
      }
      rep.ks = ks_distance(EmpiricalDist::from_samples(std::move(v)),
                           [](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); });
      rep.pass = rep.ks > tol.ks_negative_control && rep.grid_deviation > tol.ks_negative_control;
      return rep;
    }
  }
  raise(errc::invalid_parameter, "unknown case");
}

MidTarget MidTarget::frechet(double a) {
  if (!(a > 0.0)) raise(errc::invalid_parameter, "Frechet index must be > 0");
  return {MidTargetKind::Frechet, a};
}

double MidTarget::df(double x) const {
  if (kind == MidTargetKind::Gumbel) return std::exp(-std::exp(-x));
  if (x <= 0.0) raise(errc::domain_error, "Frechet support is x > 0");
  return std::exp(-std::pow(x, -a));
}

double MidTarget::neg_log_df(double x) const {
  if (kind == MidTargetKind::Gumbel) return std::exp(-x);
  if (x <= 0.0) raise(errc::domain_error, "Frechet support is x > 0");
  return std::pow(x, -a);
}

double phi_mid_df(const LTSpec& phi, const MidTarget& g, double x) { return phi(g.neg_log_df(x)); }

MaxBase MaxBase::pareto(double a) {
  if (!(a > 0.0)) raise(errc::invalid_parameter, "Pareto index must be > 0");
  return {MaxBaseKind::Pareto, a};
}

ConvergenceReport transfer_max_simulate(const LTSpec& phi, const MaxBase& base,
                                        const std::vector<double>& theta_list, int samples,
                                        std::uint64_t seed) {
  check_theta_schedule(theta_list);
  ConvergenceReport rep;
  rep.samples = samples;
  rep.seed = seed;
  MidTarget g = base.kind == MaxBaseKind::Exponential ? MidTarget::gumbel() : MidTarget::frechet(base.a);
  rep.target = phi.to_string() + " composed with -log " +
               (base.kind == MaxBaseKind::Exponential ? std::string("gumbel") : std::string("frechet"));

  auto target_cdf = [phi, g](double x) {
    if (g.kind == MidTargetKind::Frechet && x <= 0.0) return 0.0;
    return phi_mid_df(phi, g, x);
  };

  for (std::size_t t = 0; t < theta_list.size(); ++t) {
    double theta = theta_list[t];
    PphiSpec nspec(phi, 0, 1, theta);
    SeededStream stream(seed, t);
    std::vector<double> v(static_cast<std::size_t>(samples));
    for (double& x : v) {
      std::int64_t n = pphi_draw(nspec, stream);
      double mx = -std::numeric_limits<double>::infinity();
      for (std::int64_t i = 0; i < n; ++i) {
        double u = stream.uniform();
        double draw = base.kind == MaxBaseKind::Exponential ? -std::log(u) : std::pow(u, -1.0 / base.a);
        mx = std::max(mx, draw);
      }
      // Classical norming toward the max-stable limit.
      x = base.kind == MaxBaseKind::Exponential ? mx - std::log(1.0 / theta)
                                                : mx * std::pow(theta, 1.0 / base.a);
    }
    EmpiricalDist emp = EmpiricalDist::from_samples(std::move(v));
    rep.theta.push_back(theta);
    rep.ks.push_back(ks_distance(emp, target_cdf));
  }
  const Tolerances& tol = Tolerances::active();
  rep.evaluate(tol.ks_max_transfer, tol.monotone_slack);
  return rep;
}

}  // namespace idlab
