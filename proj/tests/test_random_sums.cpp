// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idlab/random_sums.hpp"
#include "oracles.hpp"

using namespace idlab;

TEST_CASE("sample-size PGF with exponential transform is geometric") {
  for (double theta : {0.25, 1.0, 4.0}) {
    PphiSpec spec(LTSpec::exponential(1.0), 0, 1, theta);
    ProbSeq q = pphi_pgf(spec, 48);
    double head = theta / (1.0 + theta);
    for (int n = 0; n <= 30; ++n) {
      CAPTURE(theta);
      CHECK(q.p(n) == doctest::Approx(head * std::pow(1.0 / (1.0 + theta), n)).epsilon(1e-11));
    }
  }
}

TEST_CASE("shift j and step k reshape the support") {
  PphiSpec shifted(LTSpec::degenerate(1.0), 1, 1, 0.5);
  ProbSeq q = pphi_pgf(shifted, 40);
  ProbSeq pois = poisson_pmf(2.0, 39);
  CHECK(q.p(0) == 0.0);
  for (int n = 0; n <= 39; ++n) CHECK(q.p(n + 1) == doctest::Approx(pois.p(n)).epsilon(1e-12));

  PphiSpec even(LTSpec::exponential(1.0), 0, 2, 1.0);
  ProbSeq qe = pphi_pgf(even, 40);
  for (int n = 1; n <= 39; n += 2) CHECK(qe.p(n) == 0.0);
  double mass = 0.0;
  for (int n = 0; n <= 40; n += 2) mass += qe.p(n);
  CHECK(mass > 0.9);
}

TEST_CASE("sample-size PGFs are constructively proper over a parameter grid") {
  for (const LTSpec& phi : {LTSpec::exponential(1.0), LTSpec::gamma(2.0, 1.0), LTSpec::degenerate(1.0),
                            LTSpec::positive_stable(0.5), LTSpec::mittag_leffler(0.5)}) {
    for (int j : {0, 2}) {
      for (int k : {1, 3}) {
        for (double theta : {0.1, 1.0}) {
          CAPTURE(phi.to_string());
          ProbSeq q = pphi_pgf(PphiSpec(phi, j, k, theta), 64);
          double sum = q.tail_bound();
          for (int i = 0; i <= q.order(); ++i) {
            CHECK(q.p(i) >= 0.0);
            sum += q.p(i);
          }
          CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("sample-size PGF evaluates consistently with its closed form") {
  PphiSpec spec(LTSpec::gamma(2.0, 1.0), 1, 2, 0.5);
  ProbSeq q = pphi_pgf(spec, 64);
  for (double s : {0.2, 0.5, 0.8}) CHECK(std::abs(q.pgf(s) - spec.pgf(s)) < 1e-8 + q.tail_bound());
}

TEST_CASE("sample-size PGFs are normalized and nondecreasing on [0,1]") {
  for (const LTSpec& phi : {LTSpec::exponential(1.0), LTSpec::positive_stable(0.5)}) {
    PphiSpec spec(phi, 2, 3, 0.7);
    CHECK(spec.pgf(1.0) == 1.0);
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
      double v = spec.pgf(0.01 * i);
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}

TEST_CASE("mixed-Poisson draws have the advertised moments and support") {
  SeededStream s1(101, 0);
  PphiSpec degenerate_spec(LTSpec::degenerate(1.0), 0, 1, 0.5);
  auto draws = pphi_sample(degenerate_spec, 100000, s1);
  double mean = 0.0;
  for (auto n : draws) mean += static_cast<double>(n);
  mean /= static_cast<double>(draws.size());
  // Poisson(2): sd of the sample mean is sqrt(2/n).
  CHECK(std::abs(mean - 2.0) < 3.0 * std::sqrt(2.0 / 100000.0));

  SeededStream s2(101, 1);
  PphiSpec exp_spec(LTSpec::exponential(1.0), 0, 1, 0.1);
  auto exp_draws = pphi_sample(exp_spec, 100000, s2);
  double exp_mean = 0.0;
  for (auto n : exp_draws) exp_mean += static_cast<double>(n);
  exp_mean /= static_cast<double>(exp_draws.size());
  // N = Poisson(U/theta), U ~ Exp(1): mean 10, variance E[N^2]-100 = 10+200-100.
  CHECK(std::abs(exp_mean - 10.0) < 3.0 * std::sqrt(110.0 / 100000.0));

  SeededStream s3(101, 2);
  PphiSpec odd_spec(LTSpec::gamma(2.0, 1.0), 3, 2, 0.5);
  for (auto n : pphi_sample(odd_spec, 2000, s3)) CHECK(n % 2 == 1);
}

TEST_CASE("empirical PGF of draws matches the coefficient route") {
  PphiSpec spec(LTSpec::exponential(1.0), 0, 1, 0.25);
  ProbSeq q = pphi_pgf(spec, 64);
  SeededStream stream(55, 0);
  const int n = 100000;
  auto draws = pphi_sample(spec, n, stream);
  for (double s : {0.2, 0.5, 0.8}) {
    double emp = 0.0;
    for (auto d : draws) emp += std::pow(s, static_cast<double>(d));
    emp /= n;
    CHECK(std::abs(emp - q.pgf(s)) < 3.0 / std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("scaled sample sizes converge to the mixing law") {
  std::vector<double> thetas{0.5, 0.1, 0.02};
  SUBCASE("exponential mixing") {
    ConvergenceReport rep = scaled_size_convergence(LTSpec::exponential(1.0), 0, 1, thetas, 30000, 71);
    CHECK(rep.pass);
    CHECK(rep.final_ks() < 0.02);
  }
  SUBCASE("gamma mixing with k = 2") {
    ConvergenceReport rep = scaled_size_convergence(LTSpec::gamma(2.0, 1.0), 0, 2, thetas, 30000, 72);
    CHECK(rep.pass);
  }
  SUBCASE("stable mixing compares against the cross sampler") {
    ConvergenceReport rep = scaled_size_convergence(LTSpec::positive_stable(0.5), 0, 1, thetas, 30000, 73);
    CHECK(rep.final_ks() < 0.03);
  }
  SUBCASE("degenerate mixing: the step target keeps the distance near one half") {
    // theta N is Poisson(1/theta) scaled; about half its mass sits below
    // the atom at every theta, so the sup distance to the step law cannot
    // shrink. The report records that honestly.
    ConvergenceReport rep = scaled_size_convergence(LTSpec::degenerate(1.0), 0, 1, thetas, 30000, 74);
    CHECK_FALSE(rep.pass);
    CHECK(rep.final_ks() > 0.4);
  }
}

TEST_CASE("convergence reports are deterministic in the seed") {
  std::vector<double> thetas{0.5, 0.1};
  ConvergenceReport a = scaled_size_convergence(LTSpec::exponential(1.0), 0, 1, thetas, 5000, 9);
  ConvergenceReport b = scaled_size_convergence(LTSpec::exponential(1.0), 0, 1, thetas, 5000, 9);
  CHECK(a.ks == b.ks);
  ConvergenceReport c = scaled_size_convergence(LTSpec::exponential(1.0), 0, 1, thetas, 5000, 10);
  CHECK(a.ks != c.ks);
}

TEST_CASE("phi-ID transforms in closed form") {
  CHECK(phi_id_lt({LTSpec::exponential(1.0), ExponentSpec::stable(0.5)}, 1.0) == doctest::Approx(0.5));
  CHECK(phi_id_lt({LTSpec::gamma(2.0, 1.0), ExponentSpec::stable(1.0)}, 3.0) == doctest::Approx(0.0625));
  CHECK(phi_id_lt({LTSpec::degenerate(1.0), ExponentSpec::stable(0.7)}, 2.0) ==
        doctest::Approx(std::exp(-std::pow(2.0, 0.7))));
  // Poisson exponent: f(s) = phi(lambda(1 - e^-s)).
  CHECK(phi_id_lt({LTSpec::exponential(1.0), ExponentSpec::poisson(2.0)}, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("the mittag-leffler transform has a completely monotone log-derivative") {
  PhiIdSpec spec{LTSpec::exponential(1.0), ExponentSpec::stable(0.5)};
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(0.25 * i);
  CMProbeReport rep = bernstein_probe([&](double s) { return -std::log(phi_id_lt(spec, s)); }, grid);
  CHECK(rep.verdict == ProbeVerdict::Pass);
}

TEST_CASE("random sums with origin mass keep an atom at zero") {
  CHECK(nsum_zero_atom(geometric_pmf(0.5, 16)) == doctest::Approx(0.5));
  CHECK(nsum_zero_atom(poisson_pmf(2.0, 16)) == doctest::Approx(std::exp(-2.0)));
  ProbSeq shifted = pphi_pgf(PphiSpec(LTSpec::degenerate(1.0), 1, 1, 1.0), 16);
  CHECK(nsum_zero_atom(shifted) == 0.0);
}

TEST_CASE("random-sum limits: the classical geometric-sum case") {
  ConvergenceReport rep = transfer_sum_simulate(LTSpec::exponential(1.0), SummandSpec::exponential(),
                                                {0.5, 0.1, 0.02}, 30000, 81);
  CHECK(rep.pass);
  CHECK(rep.final_ks() < 0.02);
}

TEST_CASE("random-sum limits: gamma mixing reproduces the gamma law") {
  ConvergenceReport rep = transfer_sum_simulate(LTSpec::gamma(2.0, 1.0), SummandSpec::exponential(),
                                                {0.5, 0.1, 0.02}, 30000, 82);
  CHECK(rep.pass);
}

TEST_CASE("random-sum limits: stable summands agree with the mittag-leffler sampler") {
  ConvergenceReport rep = transfer_sum_simulate(LTSpec::exponential(1.0), SummandSpec::positive_stable(0.5),
                                                {0.5, 0.1, 0.02}, 30000, 83);
  CHECK(rep.final_ks() < 0.03);
}

TEST_CASE("diagonal operator marginals in d = 2") {
  auto [r1, r2] = operator_phi_sum_simulate_2d(LTSpec::exponential(1.0), 0.5, 0.5, {0.5, 0.1, 0.02},
                                               20000, 91);
  CHECK(r1.final_ks() < 0.03);
  CHECK(r2.final_ks() < 0.03);
  CHECK_THROWS_AS(
      operator_phi_sum_simulate_2d(LTSpec::exponential(1.0), 0.5, 1.0, {0.1}, 100, 1, true), Error);
}

TEST_CASE("theta schedules must be positive and decreasing in practice") {
  CHECK(default_theta_schedule().front() == 0.5);
  CHECK(default_theta_schedule().back() == 0.004);
  CHECK_THROWS_AS(scaled_size_convergence(LTSpec::exponential(1.0), 0, 1, {0.1, 0.5}, 100, 1), Error);
  CHECK_THROWS_AS(scaled_size_convergence(LTSpec::exponential(1.0), 0, 1, {0.1, -0.5}, 100, 1), Error);
  CHECK_THROWS_AS(transfer_sum_simulate(LTSpec::exponential(1.0), SummandSpec::exponential(), {}, 100, 1),
                  Error);
  CHECK_THROWS_AS(PphiSpec(LTSpec::exponential(1.0), -1, 1, 0.5), Error);
  CHECK_THROWS_AS(PphiSpec(LTSpec::exponential(1.0), 0, 0, 0.5), Error);
  CHECK_THROWS_AS(PphiSpec(LTSpec::exponential(1.0), 0, 1, 0.0), Error);
}
