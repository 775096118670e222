// SPDX-License-Identifier: Apache-2.0
//
// The P_phi class of sample-size laws P_theta(s) = s^j phi((1-s^k)/theta),
// its theta N_theta -> k U scaling law, and the random-sum limits it
// drives: phi-ID laws with LT phi(psi(s)), including the diagonal d=2
// operator case.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idlab/report.hpp"
#include "idlab/rng.hpp"
#include "idlab/samplers.hpp"
#include "idlab/series.hpp"
#include "idlab/transforms.hpp"

namespace idlab {

struct PphiSpec {
  LTSpec phi;
  int j = 0;
  int k = 1;
  double theta = 1.0;
  PphiSpec(LTSpec phi_, int j_, int k_, double theta_) : phi(std::move(phi_)), j(j_), k(k_), theta(theta_) {
    if (j < 0) raise(errc::invalid_parameter, "j must be >= 0");
    if (k < 1) raise(errc::invalid_parameter, "k must be >= 1");
    if (!(theta > 0.0)) raise(errc::invalid_parameter, "theta must be > 0");
  }
  double pgf(double s) const;  // s^j phi((1 - s^k)/theta)
};

// Coefficient prefix of the sample-size PGF; constructively a pmf.
ProbSeq pphi_pgf(const PphiSpec& spec, int order);

// Mixed-Poisson draw: N = j + k * Poisson(U/theta) with U from phi's
// mixing law. Exact and O(1), and it makes theta N ~ k U + noise explicit.
std::int64_t pphi_draw(const PphiSpec& spec, SeededStream& stream);
std::vector<std::int64_t> pphi_sample(const PphiSpec& spec, int n, SeededStream& stream);

// Kolmogorov comparison of theta N_theta against k U over the schedule.
ConvergenceReport scaled_size_convergence(const LTSpec& phi, int j, int k,
                                          const std::vector<double>& theta_list, int samples,
                                          std::uint64_t seed);

// psi exponents with exp(-psi) an ID Laplace transform.
struct ExponentSpec {
  enum class Kind { Stable, Poisson } kind = Kind::Stable;
  double alpha = 1.0;  // Stable: psi(s) = scale * s^alpha
  double scale = 1.0;
  double lambda = 1.0;  // Poisson: psi(s) = lambda (1 - e^-s)
  static ExponentSpec stable(double alpha, double scale = 1.0);
  static ExponentSpec poisson(double lambda);
  double operator()(double s) const;
};

struct PhiIdSpec {
  LTSpec phi;
  ExponentSpec psi;
};

// f(s) = phi(psi(s)), the LT of the phi-ID limit law.
double phi_id_lt(const PhiIdSpec& spec, double s);

enum class SummandKind { Exponential, PositiveStable };

struct SummandSpec {
  SummandKind kind = SummandKind::Exponential;
  double alpha = 1.0;  // stable index when kind == PositiveStable
  static SummandSpec exponential() { return {SummandKind::Exponential, 1.0}; }
  static SummandSpec positive_stable(double alpha) { return {SummandKind::PositiveStable, alpha}; }
  double tail_index() const { return kind == SummandKind::Exponential ? 1.0 : alpha; }
};

// Simulates S = a_theta^-1 sum_{i<=N_theta} X_i with N_theta from P_phi
// (j=0, k=1) and the classical norming a_theta = theta^(-1/alpha). The
// target phi(s^alpha) is compared in closed form when available, otherwise
// against the independent representation U^(1/alpha) * S_alpha.
ConvergenceReport transfer_sum_simulate(const LTSpec& phi, const SummandSpec& summand,
                                        const std::vector<double>& theta_list, int samples,
                                        std::uint64_t seed);

// Guaranteed atom of any N-sum: P(S = 0) >= P(N = 0).
double nsum_zero_atom(const ProbSeq& n_pmf);

// Diagonal d=2 operator case with A_theta = diag(theta^(1/alpha_i)) and
// independent stable(alpha_i) coordinates. Only the marginals are compared
// (joint dependence is out of scope), so each coordinate is simulated as
// its own transfer run. exp_summands replaces the stable coordinate draws
// with Exp(1) (only meaningful when the index is 1).
std::pair<ConvergenceReport, ConvergenceReport> operator_phi_sum_simulate_2d(
    const LTSpec& phi, double alpha1, double alpha2, const std::vector<double>& theta_list,
    int samples, std::uint64_t seed, bool exp_summands = false);

std::vector<double> default_theta_schedule();  // {0.5, 0.1, 0.02, 0.004}

}  // namespace idlab
