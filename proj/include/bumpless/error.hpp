#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bumpless {

enum class Errc {
  malformed_input,
  not_a_bijection,
  edge_mismatch,
  boundary_violation,
  decode_error,
  star_on_non_horizontal,
  rule_conflict,
  missing_h_tile,
  empty_ladder,
  rectangle_obstruction,
  non_termination,
  invariant_violation,
  zero_polynomial,
  bound_exceeded,
};

std::string_view errc_name(Errc code);

// Errors that can only come from a broken construction, never from bad input.
bool is_internal(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised when a runtime check of the construction fails. `invariant` is a
// short stable identifier such as "at-most-one-p-cross".
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : Error(Errc::invariant_violation, invariant + ": " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace bumpless
