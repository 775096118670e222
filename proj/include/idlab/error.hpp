// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace idlab {

enum class errc {
  zero_constant_term,
  negative_argument,
  coefficient_extraction_failure,
  invalid_pmf,
  zero_at_origin,
  not_applicable,
  unsupported_mixing_sampler,
  unsupported_summand,
  unsupported_off_diagonal,
  unsupported_base,
  empty_sample,
  domain_error,
  parse_error,
  invalid_parameter,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace idlab
