#pragma once

#include <stdexcept>
#include <string>

namespace januarial {

enum class ErrorCode {
  kDomain,
  kZeroInverse,
  kOrderOverflow,
  kNoOrderLElement,
  kSearchExhausted,
  kOrderMismatch,
  kParity,
  kDisconnected,
  kNonIntegralGenus,
  kSizeLimit,
  kNotFound,
  kSplitting,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the core library carries one of the codes above;
/// the C API maps them one-to-one onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace januarial
