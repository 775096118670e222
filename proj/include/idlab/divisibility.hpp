// SPDX-License-Identifier: Apache-2.0
//
// Infinite-divisibility certification for laws on {0,1,2,...}. A law is ID
// with integer-valued components iff it is compound Poisson, which the log
// of the PGF decides constructively: Q = exp(-rate (1 - A(s))) with A a pmf
// on {1,2,...}. Refutations come with a witness: a zero mass at the origin,
// a finite support, or the first negative log coefficient.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idlab/series.hpp"

namespace idlab {

enum class IdVerdict { ID, NotIdZeroAtOrigin, NotIdFiniteSupport, NotIdNegativeCoefficient, Inconclusive };

std::string id_verdict_name(IdVerdict v);
bool verdict_is_id(IdVerdict v);

struct Decomposition {
  IdVerdict verdict = IdVerdict::Inconclusive;
  std::optional<double> rate;          // -log p_0, present when ID
  std::optional<ProbSeq> compounding;  // pmf with zero mass at 0, present when ID
  std::optional<int> witness_index;    // first negative compounding coefficient
  std::optional<double> witness_value;
  double min_margin = 0.0;  // min_k a_k over the window; the verdict's slack
};

// Decides ID / not-ID for a pmf prefix. Precedence: zero mass at the
// origin, then finite support (tail below 1e-14, bounded max index, at
// least two support points), then the log-coefficient test. The
// coefficient witness is attached to any refutation when one exists.
Decomposition compound_poisson_decompose(const ProbSeq& q);

// Rebuilds exp(-rate (1 - A(s))) from an ID decomposition; the round-trip
// error against the input is the certificate quality.
ProbSeq recombine(const Decomposition& d, int order);

struct RootResult {
  std::optional<ProbSeq> component;  // n-th root pmf prefix when it exists
  std::optional<int> witness_index;  // first negative coefficient otherwise
  std::optional<double> witness_value;
};

// Candidate n-th-root component via q^(1/n); requires p_0 > 0.
RootResult nth_root_component(const ProbSeq& q, int n);

struct SupportProfile {
  std::vector<int> support_indices;               // p_i > threshold
  std::vector<std::pair<int, int>> gaps;          // (first missing index, run length)
  bool finite = false;
};

SupportProfile support_profile(const ProbSeq& q, double threshold);

struct SupportCheck {
  bool coincide = false;
  std::vector<int> input_support;
  std::vector<int> component_support;
};

// Compares the support of q with the support of its n-th root component on
// the common prefix where both still carry mass above 1e-12. Throws
// not_applicable when q is not ID.
SupportCheck component_support_check(const ProbSeq& q, int n);

// Negative-binomial sums of a lattice step k: PGF (p/(1 - q s^k))^t, with
// an optional shift by one index (which zeroes the origin mass).
ProbSeq lattice_negbin_pmf(double p, int k, double t, int order, bool shifted);

}  // namespace idlab
