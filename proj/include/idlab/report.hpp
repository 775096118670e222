// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace idlab {

// Seeded Monte-Carlo comparison of an empirical law against a target over
// a decreasing theta schedule.
struct ConvergenceReport {
  std::vector<double> theta;
  std::vector<double> ks;
  int samples = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string target;  // human-readable target description
  // Empirical CDF points of the final-theta run, for CSV plotting.
  std::vector<std::pair<double, double>> final_cdf;

  double final_ks() const { return ks.empty() ? 1.0 : ks.back(); }
  // Sets and returns pass: KS nonincreasing within `slack`, final < `limit`.
  bool evaluate(double limit, double slack);
};

// Schedules must be positive and strictly decreasing toward 0.
void check_theta_schedule(const std::vector<double>& thetas);

}  // namespace idlab
