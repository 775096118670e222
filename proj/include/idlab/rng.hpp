// SPDX-License-Identifier: Apache-2.0
//
// Deterministic, splittable random streams. The generator is splitmix64:
// a fixed 64-bit mixing function applied to an additive counter, so the
// output sequence for a given (seed, stream_id) is the same on every
// platform and every run. Distinct stream_ids give decorrelated streams;
// parallel code must partition work by stream_id, never share a stream.
#pragma once

#include <cstdint>

namespace idlab {

// Name recorded in reports so runs are reproducible elsewhere.
inline constexpr const char* kGeneratorName = "splitmix64";

class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();
  // Uniform on (0,1): 53-bit mantissa, offset by half an ulp so 0 never
  // appears (safe under log).
  double uniform();
  double exponential();  // rate 1
  double normal();       // Box-Muller, consumes two uniforms per call
  // Marsaglia-Tsang for shape >= 1, with the standard power boost below 1.
  double gamma(double shape);
  // Inversion below mean 10, Hormann's PTRS transformed rejection above.
  std::int64_t poisson(double mean);
  // Geometric on {1,2,...} with success probability p.
  std::int64_t geometric_positive(double p);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
};

}  // namespace idlab
