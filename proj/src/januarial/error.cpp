#include "januarial/error.hpp"

namespace januarial {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kOrderOverflow: return "OrderOverflow";
    case ErrorCode::kNoOrderLElement: return "NoOrderLElement";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kParity: return "ParityError";
    case ErrorCode::kDisconnected: return "DisconnectedError";
    case ErrorCode::kNonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kSplitting: return "SplittingViolation";
  }
  return "UnknownError";
}

}  // namespace januarial
