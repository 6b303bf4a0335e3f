#include "bumpless/error.hpp"

namespace bumpless {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::malformed_input: return "MalformedInput";
    case Errc::not_a_bijection: return "NotABijection";
    case Errc::edge_mismatch: return "EdgeMismatch";
    case Errc::boundary_violation: return "BoundaryViolation";
    case Errc::decode_error: return "DecodeError";
    case Errc::star_on_non_horizontal: return "StarOnNonHorizontal";
    case Errc::rule_conflict: return "RuleConflict";
    case Errc::missing_h_tile: return "MissingHTile";
    case Errc::empty_ladder: return "EmptyLadder";
    case Errc::rectangle_obstruction: return "RectangleObstruction";
    case Errc::non_termination: return "NonTermination";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::bound_exceeded: return "BoundExceeded";
  }
  return "Unknown";
}

bool is_internal(Errc code) {
  switch (code) {
    case Errc::star_on_non_horizontal:
    case Errc::rule_conflict:
    case Errc::missing_h_tile:
    case Errc::empty_ladder:
    case Errc::rectangle_obstruction:
    case Errc::non_termination:
    case Errc::invariant_violation:
      return true;
    default:
      return false;
  }
}

}  // namespace bumpless
