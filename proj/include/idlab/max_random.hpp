// SPDX-License-Identifier: Apache-2.0
//
// Discrete max-types, stability of extremes under geometric sample size,
// and random-max limits with d.f. phi(-log G).
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "idlab/report.hpp"
#include "idlab/transforms.hpp"

namespace idlab {

// The worked counterexample showing that the thinning notion of "same
// type" and the lattice d.f. notion G(k) = F(alpha k) differ: a geometric
// pair with q = 1/4, c = 1/2, where the four PGFs are simple rationals.
struct DTypeVsLatticeReport {
  std::array<double, 4> s{};         // evaluation grid {0, 1/4, 1/2, 3/4}
  std::array<double, 4> qx{};        // 3/(4-s)
  std::array<double, 4> qy{};        // 1/(2-s)
  std::array<double, 4> qx_thin{};   // 6/(7-s)
  std::array<double, 4> qy_thin{};   // 2/(3-s)
  double dev_at_zero = 0.0;          // |Q_X(0) - Q_Y(1/2)| = 1/12
  double sup_dev_x_vs_ythin = 0.0;
  double sup_dev_y_vs_xthin = 0.0;
  bool distinct = false;             // both sup deviations > 0.01
};

DTypeVsLatticeReport dtype_vs_lattice_report();

struct LatticeDfPair {
  std::vector<double> f;  // F(k) = 1 - m(k)
  std::vector<double> g;  // G(k) = 1 - m(alpha k)
};

// Lattice d.f. pair of the same (lattice) type, built from the LT value
// sequence m; alpha is any positive real, m evaluated at the real points
// alpha*k.
LatticeDfPair lattice_dtype_pair(const LTSpec& m, double alpha, int kmax);

enum class MaxCaseKind { ParetoMin, LogisticMax, ExponentialGeoMin };

struct MaxStabilityCase {
  MaxCaseKind kind = MaxCaseKind::ParetoMin;
  double a = 2.0;  // Pareto tail index
  double p = 0.1;  // geometric parameter
};

struct GeoStabilityReport {
  double grid_deviation = 0.0;  // closed-form identity deviation
  double ks = 0.0;              // simulation distance to the base law
  bool negative_control = false;
  bool pass = false;  // identity + KS for the stable cases; KS bounded away for the control
  int samples = 0;
  std::uint64_t seed = 0;
};

// Geometric(p)-size extreme against the base law. ParetoMin: survival
// 1/(1+x^a), min rescaled by p^(-1/a). LogisticMax: max shifted by +log p.
// ExponentialGeoMin is the negative control: the geometric minimum of
// exponentials is not exponential, and the report must show that.
GeoStabilityReport geo_extreme_stability_check(const MaxStabilityCase& c, int samples, std::uint64_t seed);

enum class MidTargetKind { Frechet, Gumbel };

struct MidTarget {
  MidTargetKind kind = MidTargetKind::Gumbel;
  double a = 1.0;  // Frechet index
  static MidTarget gumbel() { return {MidTargetKind::Gumbel, 1.0}; }
  static MidTarget frechet(double a);
  double df(double x) const;       // G(x)
  double neg_log_df(double x) const;
};

// F(x) = phi(-log G(x)); throws domain_error outside G's support.
double phi_mid_df(const LTSpec& phi, const MidTarget& g, double x);

enum class MaxBaseKind { Exponential, Pareto };

struct MaxBase {
  MaxBaseKind kind = MaxBaseKind::Exponential;
  double a = 1.0;  // Pareto index
  static MaxBase exponential() { return {MaxBaseKind::Exponential, 1.0}; }
  static MaxBase pareto(double a);
};

// Random-size maxima: M = max over N_theta draws from the base law,
// normalized with the classical max-norming (Exponential -> Gumbel with
// b_theta = log(1/theta); Pareto -> Frechet with a_theta = theta^(-1/a)),
// N_theta from P_phi with j=0, k=1. An empty max is -infinity. Target d.f.
// phi(-log G).
ConvergenceReport transfer_max_simulate(const LTSpec& phi, const MaxBase& base,
                                        const std::vector<double>& theta_list, int samples,
                                        std::uint64_t seed);

}  // namespace idlab
