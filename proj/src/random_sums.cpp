// SPDX-License-Identifier: Apache-2.0
#include "idlab/random_sums.hpp"

#include <algorithm>
#include <cmath>

#include "idlab/special.hpp"
#include "idlab/tolerances.hpp"

namespace idlab {

namespace {

// CDF of k U when it has a usable closed form.
std::optional<std::function<double(double)>> scaled_mixing_cdf(const LTSpec& phi, double k) {
  switch (phi.family()) {
    case LTFamily::Degenerate: {
      double atom = k * phi.c();
      return [atom](double x) { return x >= atom ? 1.0 : 0.0; };
    }
    case LTFamily::Exponential: {
      double rate = phi.rate() / k;
      return [rate](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * x); };
    }
    case LTFamily::Gamma: {
      double shape = phi.shape();
      double rate = phi.rate() / k;
      return [shape, rate](double x) { return x <= 0.0 ? 0.0 : gamma_p(shape, rate * x); };
    }
    default: return std::nullopt;
  }
}

void record_final_cdf(ConvergenceReport& rep, const EmpiricalDist& dist) {
  // Thinned to ~200 points for plotting.
  const std::vector<double>& v = dist.values();
  std::size_t step = std::max<std::size_t>(1, v.size() / 200);
  for (std::size_t i = 0; i < v.size(); i += step)
    rep.final_cdf.emplace_back(v[i], static_cast<double>(i + 1) / static_cast<double>(v.size()));
}

}  // namespace

void check_theta_schedule(const std::vector<double>& thetas) {
  if (thetas.empty()) raise(errc::invalid_parameter, "theta schedule is empty");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!(thetas[i] > 0.0)) raise(errc::invalid_parameter, "theta values must be > 0");
    if (i > 0 && thetas[i] >= thetas[i - 1])
      raise(errc::invalid_parameter, "theta schedule must be strictly decreasing");
  }
}

double PphiSpec::pgf(double s) const {
  return std::pow(s, j) * phi((1.0 - std::pow(s, k)) / theta);
}

ProbSeq pphi_pgf(const PphiSpec& spec, int order) {
  if (order < spec.j) raise(errc::invalid_parameter, "order smaller than the shift j");
  // Inner part G(u) = phi((1-u)/theta) is itself the PGF bridge applied to
  // the rescaled transform phi(s/theta), whose family is closed under the
  // rescaling except for the two heavy-tailed ones, handled as series.
  int inner_order = std::max(1, (order - spec.j) / spec.k);
  ProbSeq inner = [&]() -> ProbSeq {
    switch (spec.phi.family()) {
      case LTFamily::Degenerate: return pgf_from_lt(LTSpec::degenerate(spec.phi.c() / spec.theta), inner_order);
      case LTFamily::Exponential:
        return pgf_from_lt(LTSpec::exponential(spec.phi.rate() * spec.theta), inner_order);
      case LTFamily::Gamma:
        return pgf_from_lt(LTSpec::gamma(spec.phi.shape(), spec.phi.rate() * spec.theta), inner_order);
      case LTFamily::PositiveStable: {
        // exp(-((1-u)/theta)^a) is discrete stable with lambda = theta^-a.
        DiscreteStableSpec ds(spec.phi.alpha(), std::pow(spec.theta, -spec.phi.alpha()));
        return discrete_stable_pmf(ds, inner_order);
      }
      case LTFamily::MittagLeffler: {
        Series d = std::pow(spec.theta, -spec.phi.alpha()) * one_minus_s_pow(spec.phi.alpha(), inner_order);
        d[0] += 1.0;
        return ProbSeq::from_coefficients(series_reciprocal(d).coeffs());
      }
    }
    raise(errc::invalid_parameter, "unknown family");
  }();
  std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
  for (int m = 0; m <= inner.order(); ++m) {
    int idx = spec.j + spec.k * m;
    if (idx <= order) out[static_cast<std::size_t>(idx)] = inner.p(m);
  }
  double sum = 0.0;
  for (double x : out) sum += x;
  return ProbSeq(std::move(out), std::max(0.0, 1.0 - sum));
}

std::int64_t pphi_draw(const PphiSpec& spec, SeededStream& stream) {
  double u = draw_mixing(spec.phi, stream);
  return spec.j + spec.k * stream.poisson(u / spec.theta);
}

std::vector<std::int64_t> pphi_sample(const PphiSpec& spec, int n, SeededStream& stream) {
  if (n < 1) raise(errc::invalid_parameter, "sample count must be >= 1");
  std::vector<std::int64_t> out(static_cast<std::size_t>(n));
  for (auto& x : out) x = pphi_draw(spec, stream);
  return out;
}

ConvergenceReport scaled_size_convergence(const LTSpec& phi, int j, int k,
                                          const std::vector<double>& theta_list, int samples,
                                          std::uint64_t seed) {
  check_theta_schedule(theta_list);
  ConvergenceReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.target = "k*U with U ~ " + phi.to_string();
  auto target_cdf = scaled_mixing_cdf(phi, static_cast<double>(k));
  for (std::size_t t = 0; t < theta_list.size(); ++t) {
    PphiSpec spec(phi, j, k, theta_list[t]);
    SeededStream stream(seed, t);
    std::vector<double> scaled(static_cast<std::size_t>(samples));
    for (double& x : scaled) x = theta_list[t] * static_cast<double>(pphi_draw(spec, stream));
    EmpiricalDist emp = EmpiricalDist::from_samples(std::move(scaled));
    double d;
    if (target_cdf) {
      d = ks_distance(emp, *target_cdf);
    } else {
      SeededStream cross(seed, 1000 + t);
      std::vector<double> ref(static_cast<std::size_t>(samples));
      for (double& x : ref) x = static_cast<double>(k) * draw_mixing(phi, cross);
      d = ks_distance(emp, EmpiricalDist::from_samples(std::move(ref)));
    }
    rep.theta.push_back(theta_list[t]);
    rep.ks.push_back(d);
    if (t + 1 == theta_list.size()) record_final_cdf(rep, emp);
  }
  const Tolerances& tol = Tolerances::active();
  rep.evaluate(tol.ks_lemma3, tol.monotone_slack);
  return rep;
}

bool ConvergenceReport::evaluate(double limit, double slack) {
  pass = final_ks() < limit;
  for (std::size_t i = 1; i < ks.size(); ++i)
    if (ks[i] > ks[i - 1] + slack) pass = false;
  return pass;
}

ExponentSpec ExponentSpec::stable(double alpha, double scale) {
  if (!(alpha > 0.0) || alpha > 1.0) raise(errc::invalid_parameter, "stable exponent index must be in (0,1]");
  if (!(scale > 0.0)) raise(errc::invalid_parameter, "exponent scale must be > 0");
  ExponentSpec e;
  e.kind = Kind::Stable;
  e.alpha = alpha;
  e.scale = scale;
  return e;
}

ExponentSpec ExponentSpec::poisson(double lambda) {
  if (!(lambda > 0.0)) raise(errc::invalid_parameter, "poisson exponent rate must be > 0");
  ExponentSpec e;
  e.kind = Kind::Poisson;
  e.lambda = lambda;
  return e;
}

double ExponentSpec::operator()(double s) const {
  if (s < 0.0) raise(errc::negative_argument, "exponent argument must be >= 0");
  if (kind == Kind::Stable) return scale * std::pow(s, alpha);
  return lambda * (1.0 - std::exp(-s));
}

double phi_id_lt(const PhiIdSpec& spec, double s) { return spec.phi(spec.psi(s)); }

namespace {

double draw_summand(const SummandSpec& summand, SeededStream& stream) {
  if (summand.kind == SummandKind::Exponential) return stream.exponential();
  return draw_positive_stable(summand.alpha, stream);
}

// Closed-form CDF of the phi(s^alpha) limit when we have one.
std::optional<std::function<double(double)>> transfer_target_cdf(const LTSpec& phi, double alpha) {
  if (alpha != 1.0) return std::nullopt;
  switch (phi.family()) {
    case LTFamily::Exponential: {
      double rate = phi.rate();
      return [rate](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * x); };
    }
    case LTFamily::Gamma: {
      double shape = phi.shape();
      double rate = phi.rate();
      return [shape, rate](double x) { return x <= 0.0 ? 0.0 : gamma_p(shape, rate * x); };
    }
    case LTFamily::Degenerate: {
      double atom = phi.c();
      return [atom](double x) { return x >= atom ? 1.0 : 0.0; };
    }
    default: return std::nullopt;
  }
}

ConvergenceReport run_transfer(const LTSpec& phi, const SummandSpec& summand,
                               const std::vector<double>& theta_list, int samples, std::uint64_t seed,
                               std::uint64_t stream_base, double ks_limit) {
  check_theta_schedule(theta_list);
  ConvergenceReport rep;
  rep.samples = samples;
  rep.seed = seed;
  double alpha = summand.tail_index();
  rep.target = phi.to_string() + " composed with s^" + std::to_string(alpha);
  auto closed = transfer_target_cdf(phi, alpha);
  for (std::size_t t = 0; t < theta_list.size(); ++t) {
    double theta = theta_list[t];
    PphiSpec nspec(phi, 0, 1, theta);
    SeededStream stream(seed, stream_base + t);
    double norm = std::pow(theta, 1.0 / alpha);
    std::vector<double> sums(static_cast<std::size_t>(samples));
    for (double& x : sums) {
      std::int64_t n = pphi_draw(nspec, stream);
      double acc = 0.0;
      for (std::int64_t i = 0; i < n; ++i) acc += draw_summand(summand, stream);
      x = norm * acc;
    }
    EmpiricalDist emp = EmpiricalDist::from_samples(std::move(sums));
    double d;
    if (closed) {
      d = ks_distance(emp, *closed);
    } else {
      // Independent representation of the limit: U^(1/alpha) * S_alpha.
      SeededStream cross(seed, stream_base + 500 + t);
      std::vector<double> ref(static_cast<std::size_t>(samples));
      for (double& x : ref)
        x = std::pow(draw_mixing(phi, cross), 1.0 / alpha) * draw_positive_stable(alpha, cross);
      d = ks_distance(emp, EmpiricalDist::from_samples(std::move(ref)));
    }
    rep.theta.push_back(theta);
    rep.ks.push_back(d);
    if (t + 1 == theta_list.size()) record_final_cdf(rep, emp);
  }
  rep.evaluate(ks_limit, Tolerances::active().monotone_slack);
  return rep;
}

}  // namespace

ConvergenceReport transfer_sum_simulate(const LTSpec& phi, const SummandSpec& summand,
                                        const std::vector<double>& theta_list, int samples,
                                        std::uint64_t seed) {
  const Tolerances& tol = Tolerances::active();
  bool closed = transfer_target_cdf(phi, summand.tail_index()).has_value();
  return run_transfer(phi, summand, theta_list, samples, seed, 0,
                      closed ? tol.ks_transfer : tol.ks_cross);
}

double nsum_zero_atom(const ProbSeq& n_pmf) { return n_pmf.p(0); }

std::pair<ConvergenceReport, ConvergenceReport> operator_phi_sum_simulate_2d(
    const LTSpec& phi, double alpha1, double alpha2, const std::vector<double>& theta_list,
    int samples, std::uint64_t seed, bool exp_summands) {
  if (exp_summands && (alpha1 != 1.0 || alpha2 != 1.0))
    raise(errc::unsupported_summand, "exponential summands require index 1 in both coordinates");
  const Tolerances& tol = Tolerances::active();
  auto make = [&](double alpha, std::uint64_t base) {
    SummandSpec s = exp_summands ? SummandSpec::exponential() : SummandSpec::positive_stable(alpha);
    return run_transfer(phi, s, theta_list, samples, seed, base, tol.ks_operator);
  };
  return {make(alpha1, 10000), make(alpha2, 20000)};
}

std::vector<double> default_theta_schedule() { return {0.5, 0.1, 0.02, 0.004}; }

}  // namespace idlab
