#pragma once

#include <stdexcept>
#include <string>

namespace hilbert_gauss {

enum class ErrorCode {
  dimension_mismatch,
  invalid_argument,
  empty_subspace,
  unsupported,
  hypothesis_violated,
  degenerate_functional,
  zero_residual,
  not_invariant,
  rank_deficient,
  unbiasedness_violated,
  config,
};

const char* to_string(ErrorCode code) noexcept;

/// Raised by every library routine when a precondition or model hypothesis
/// fails. The code lets callers (and the CLI) tell the cases apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hilbert_gauss
