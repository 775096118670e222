// SPDX-License-Identifier: Apache-2.0
//
// Small special-function kit: just what the closed-form CDF targets need.
#pragma once

namespace idlab {

// Regularized lower incomplete gamma P(a, x) via the usual series /
// continued-fraction split at x = a + 1.
double gamma_p(double a, double x);

}  // namespace idlab
