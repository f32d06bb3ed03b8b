#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stanley {

enum class error_kind {
  malformed_input,
  precondition,
  overflow,
  resource_limit,
  prefix_too_short,
  insufficient_prefix,
  negative_character,
  forbidden_character,
  verification_failure,
  invariant_violation,
};

inline std::string_view to_string(error_kind kind) {
  switch (kind) {
    case error_kind::malformed_input: return "malformed-input";
    case error_kind::precondition: return "precondition-violation";
    case error_kind::overflow: return "overflow";
    case error_kind::resource_limit: return "resource-limit";
    case error_kind::prefix_too_short: return "prefix-too-short";
    case error_kind::insufficient_prefix: return "insufficient-prefix";
    case error_kind::negative_character: return "negative-character";
    case error_kind::forbidden_character: return "forbidden-character";
    case error_kind::verification_failure: return "verification-failure";
    case error_kind::invariant_violation: return "invariant-violation";
  }
  return "unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit status without string matching.
class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

}  // namespace stanley
