#include "gaql/error.hpp"

namespace gaql {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "ring_mismatch";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::ArityMismatch: return "arity_mismatch";
    case ErrorCode::ExponentOverflow: return "exponent_overflow";
    case ErrorCode::NotExactDivision: return "not_exact_division";
    case ErrorCode::InvalidRing: return "invalid_ring";
    case ErrorCode::Syntax: return "syntax_error";
    case ErrorCode::UnknownVariable: return "unknown_variable";
    case ErrorCode::MalformedRational: return "malformed_rational";
    case ErrorCode::DegreeExplosion: return "degree_explosion";
    case ErrorCode::Uncertified: return "uncertified";
    case ErrorCode::ActionLawViolated: return "action_law_violated";
    case ErrorCode::MalformedGrid: return "malformed_grid";
    case ErrorCode::UnknownName: return "unknown_name";
    case ErrorCode::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

ParseError::ParseError(ErrorCode code, const std::string& message,
                       std::size_t line, std::size_t column)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace gaql
