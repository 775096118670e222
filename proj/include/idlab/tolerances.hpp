// SPDX-License-Identifier: Apache-2.0
//
// One table for every simulation tolerance. The env var
// IDLAB_TOLERANCE_TABLE may point at a JSON file overriding any entry.
#pragma once

#include <string>

namespace idlab {

struct Tolerances {
  double ks_lemma3 = 0.02;          // theta N_theta vs k U, final theta
  double ks_transfer = 0.02;        // random-sum limits with closed-form targets
  double ks_cross = 0.03;           // two-sample cross-oracle comparisons
  double ks_operator = 0.03;        // operator-stable marginals
  double ks_max = 0.02;             // geometric extreme stability
  double ks_max_transfer = 0.03;    // random-max limits
  double ks_negative_control = 0.10;
  double monotone_slack = 0.005;    // allowed KS increase along a theta schedule
  double mc_sigma = 3.0;            // moment / LT checks
  double pmf_sigma = 4.0;           // per-bin pmf checks

  static Tolerances load(const std::string& path);
  // Defaults, or the table named by IDLAB_TOLERANCE_TABLE (read once).
  static const Tolerances& active();
};

}  // namespace idlab
