#pragma once

#include <stdexcept>
#include <string>

namespace g2c {

/// Error categories raised by the library. Each value corresponds to one
/// documented failure mode of an operation.
enum class errc {
  non_prime_modulus,
  forbidden_characteristic,
  division_by_zero,
  descriptor_mismatch,
  zero_vector,
  both_zero,
  zero_polynomial,
  constant_polynomial,
  unsupported_for_rationals,
  common_factor,
  zero_denominator,
  inseparable_map,
  bad_lambda,
  degree_drop,
  not_in_moduli,
  singular_sextic,
  rationals_unsupported,
  io_failure,
  bad_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace g2c
