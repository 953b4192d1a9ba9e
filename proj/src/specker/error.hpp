#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace specker {

enum class ErrorCode {
  invalid_argument,
  parse,
  algebra_mismatch,
  domain,
  too_large,
  unbound_name,
  no_witness,
  not_devries,
  internal,  // a cross-check between two computation routes disagreed
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const { return code_; }
  /// Character offset into the parsed text, for parse errors.
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::internal, "cross-check failed: " + what);
}

}  // namespace specker
