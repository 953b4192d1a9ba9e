#include "specker/error.hpp"

namespace specker {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::algebra_mismatch: return "algebra_mismatch";
    case ErrorCode::domain: return "domain";
    case ErrorCode::too_large: return "too_large";
    case ErrorCode::unbound_name: return "unbound_name";
    case ErrorCode::no_witness: return "no_witness";
    case ErrorCode::not_devries: return "not_devries";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace specker
