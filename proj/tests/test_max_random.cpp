// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idlab/max_random.hpp"

using namespace idlab;

TEST_CASE("the rational table of the geometric type counterexample") {
  DTypeVsLatticeReport r = dtype_vs_lattice_report();
  double s_points[4] = {0.0, 0.25, 0.5, 0.75};
  for (std::size_t i = 0; i < 4; ++i) {
    double s = s_points[i];
    CHECK(std::abs(r.qx[i] - 3.0 / (4.0 - s)) < 1e-15);
    CHECK(std::abs(r.qy[i] - 1.0 / (2.0 - s)) < 1e-15);
    CHECK(std::abs(r.qx_thin[i] - 6.0 / (7.0 - s)) < 1e-15);
    CHECK(std::abs(r.qy_thin[i] - 2.0 / (3.0 - s)) < 1e-15);
  }
  CHECK(r.qx[0] == 0.75);
  CHECK(std::abs(r.qy_thin[0] - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(r.dev_at_zero - 1.0 / 12.0) < 1e-15);
  CHECK(r.sup_dev_x_vs_ythin > 0.01);
  CHECK(r.sup_dev_y_vs_xthin > 0.01);
  CHECK(r.distinct);
}

TEST_CASE("lattice distribution pairs from a transform value sequence") {
  // m(k) = (1/4)^k is the transform of the point mass at log 4; with
  // alpha = 1/2 the companion is 1 - (1/2)^k.
  LTSpec m = LTSpec::degenerate(std::log(4.0));
  LatticeDfPair pair = lattice_dtype_pair(m, 0.5, 20);
  for (int k = 0; k <= 20; ++k) {
    CHECK(pair.f[static_cast<std::size_t>(k)] == doctest::Approx(1.0 - std::pow(0.25, k)).epsilon(1e-12));
    CHECK(pair.g[static_cast<std::size_t>(k)] == doctest::Approx(1.0 - std::pow(0.5, k)).epsilon(1e-12));
  }
  CHECK(pair.f[0] == 0.0);
  CHECK(pair.g[0] == 0.0);

  LatticeDfPair same = lattice_dtype_pair(m, 1.0, 12);
  CHECK(same.f == same.g);

  LatticeDfPair ml = lattice_dtype_pair(LTSpec::mittag_leffler(0.5), 0.7, 24);
  for (std::size_t k = 1; k < ml.f.size(); ++k) {
    CHECK(ml.f[k] >= ml.f[k - 1]);
    CHECK(ml.g[k] >= ml.g[k - 1]);
  }
}

TEST_CASE("the rescaled geometric minimum of the survival 1/(1+x^a) family is stable") {
  GeoStabilityReport rep = geo_extreme_stability_check({MaxCaseKind::ParetoMin, 2.0, 0.1}, 30000, 1001);
  CHECK(rep.grid_deviation < 1e-12);
  CHECK(rep.ks < 0.02);
  CHECK(rep.pass);
  CHECK_FALSE(rep.negative_control);
}

TEST_CASE("the shifted geometric maximum of logistic draws is logistic") {
  GeoStabilityReport rep = geo_extreme_stability_check({MaxCaseKind::LogisticMax, 0.0, 0.2}, 30000, 1002);
  CHECK(rep.grid_deviation < 1e-12);
  CHECK(rep.ks < 0.02);
  CHECK(rep.pass);
}

TEST_CASE("the geometric minimum of exponentials is the negative control") {
  GeoStabilityReport rep = geo_extreme_stability_check({MaxCaseKind::ExponentialGeoMin, 0.0, 0.5}, 30000, 1003);
  CHECK(rep.negative_control);
  CHECK(rep.ks > 0.1);
  CHECK(rep.grid_deviation > 0.1);
  CHECK(rep.pass);
}

TEST_CASE("random-max limit distribution functions in closed form") {
  CHECK(phi_mid_df(LTSpec::exponential(1.0), MidTarget::gumbel(), 0.0) == doctest::Approx(0.5));
  // Degenerate mixing leaves the target untouched.
  for (double x : {-1.0, 0.0, 1.5}) {
    CHECK(phi_mid_df(LTSpec::degenerate(1.0), MidTarget::gumbel(), x) ==
          doctest::Approx(std::exp(-std::exp(-x))).epsilon(1e-13));
  }
  for (double x : {0.5, 1.0, 3.0}) {
    CHECK(phi_mid_df(LTSpec::degenerate(1.0), MidTarget::frechet(2.0), x) ==
          doctest::Approx(std::exp(-std::pow(x, -2.0))).epsilon(1e-13));
  }
  CHECK(phi_mid_df(LTSpec::gamma(2.0, 1.0), MidTarget::frechet(1.0), 2.0) == doctest::Approx(4.0 / 9.0));
  CHECK_THROWS_AS(phi_mid_df(LTSpec::exponential(1.0), MidTarget::frechet(1.0), -1.0), Error);
}

TEST_CASE("random maxima of exponentials converge to the logistic law") {
  ConvergenceReport rep = transfer_max_simulate(LTSpec::exponential(1.0), MaxBase::exponential(),
                                                {0.5, 0.1, 0.02}, 30000, 1004);
  CHECK(rep.pass);
  CHECK(rep.final_ks() < 0.03);
}

TEST_CASE("degenerate mixing reduces to the classical max limit") {
  ConvergenceReport rep = transfer_max_simulate(LTSpec::degenerate(1.0), MaxBase::pareto(2.0),
                                                {0.5, 0.1, 0.02}, 30000, 1005);
  CHECK(rep.pass);
}

TEST_CASE("gamma mixing of the unit-index max limit") {
  ConvergenceReport rep = transfer_max_simulate(LTSpec::gamma(2.0, 1.0), MaxBase::pareto(1.0),
                                                {0.5, 0.1, 0.02}, 30000, 1006);
  CHECK(rep.pass);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(geo_extreme_stability_check({MaxCaseKind::ParetoMin, 2.0, 0.0}, 100, 1), Error);
  CHECK_THROWS_AS(MidTarget::frechet(0.0), Error);
  CHECK_THROWS_AS(MaxBase::pareto(-1.0), Error);
  CHECK_THROWS_AS(lattice_dtype_pair(LTSpec::exponential(1.0), 0.0, 10), Error);
}
