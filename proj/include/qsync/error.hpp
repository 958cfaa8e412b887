// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_ERROR_HPP
#define QSYNC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsync {

enum class ErrorCode {
    kInvalidModulus,
    kDivisionByZero,
    kLengthMismatch,
    kOutOfRange,
    kParse,
    kNotAGenerator,
    kDimensionTooLarge,
    kPairInvariant,
    kDegenerateInput,
    kNoPartner,
    kSpecMismatch,
    kOperatorNotGauge,
    kContainmentViolation,
    kConstructionInconsistency,
    kClassicalLogicalIsGauge,
    kLemmaViolation,
    kUncorrectableSync,
    kUsage,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

inline void require(bool condition, ErrorCode code, const std::string &message) {
    if (!condition) {
        fail(code, message);
    }
}

}  // namespace qsync

#endif
