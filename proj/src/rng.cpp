// SPDX-License-Identifier: Apache-2.0
#include "idlab/rng.hpp"

#include <cmath>

#include "idlab/error.hpp"

namespace idlab {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

SeededStream::SeededStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  // Hash seed and stream id through two mixing rounds so nearby ids do not
  // produce overlapping sequences.
  state_ = mix64(mix64(seed + kGamma) ^ mix64(stream_id + 0xD1B54A32D192ED03ull));
}

std::uint64_t SeededStream::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

double SeededStream::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SeededStream::exponential() { return -std::log(uniform()); }

double SeededStream::normal() {
  double u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

double SeededStream::gamma(double shape) {
  if (shape <= 0.0) raise(errc::invalid_parameter, "gamma shape must be > 0");
  if (shape < 1.0) {
    double u = uniform();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::int64_t SeededStream::poisson(double mean) {
  if (mean < 0.0) raise(errc::invalid_parameter, "poisson mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    // Product-of-uniforms inversion.
    double limit = std::exp(-mean);
    std::int64_t k = 0;
    double prod = uniform();
    while (prod > limit) {
      ++k;
      prod *= uniform();
    }
    return k;
  }
  // PTRS (Hormann 1993).
  double b = 0.931 + 2.53 * std::sqrt(mean);
  double a = -0.059 + 0.02483 * b;
  double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  double v_r = 0.9277 - 3.6224 / (b - 2.0);
  double log_mean = std::log(mean);
  for (;;) {
    double u = uniform() - 0.5;
    double v = uniform();
    double us = 0.5 - std::abs(u);
    double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * log_mean - mean - std::lgamma(k + 1.0)) {
      return static_cast<std::int64_t>(k);
    }
  }
}

std::int64_t SeededStream::geometric_positive(double p) {
  if (p <= 0.0 || p > 1.0) raise(errc::invalid_parameter, "geometric p must be in (0,1]");
  if (p == 1.0) return 1;
  double u = uniform();
  // P(N > n) = (1-p)^n; inversion gives N = 1 + floor(log u / log(1-p)).
  std::int64_t n = 1 + static_cast<std::int64_t>(std::floor(std::log(u) / std::log1p(-p)));
  return n < 1 ? 1 : n;
}

}  // namespace idlab
