#include "hilbert_gauss/error.hpp"

namespace hilbert_gauss {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension mismatch";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::empty_subspace: return "empty subspace";
    case ErrorCode::unsupported: return "unsupported combination";
    case ErrorCode::hypothesis_violated: return "model hypothesis violated";
    case ErrorCode::degenerate_functional: return "degenerate functional";
    case ErrorCode::zero_residual: return "zero residual";
    case ErrorCode::not_invariant: return "subspace not Q-invariant";
    case ErrorCode::rank_deficient: return "rank deficient";
    case ErrorCode::unbiasedness_violated: return "unbiasedness violated";
    case ErrorCode::config: return "configuration error";
  }
  return "error";
}

}  // namespace hilbert_gauss
