// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/error.hpp"

namespace qsync {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidModulus:
            return "invalid-modulus";
        case ErrorCode::kDivisionByZero:
            return "division-by-zero";
        case ErrorCode::kLengthMismatch:
            return "length-mismatch";
        case ErrorCode::kOutOfRange:
            return "out-of-range";
        case ErrorCode::kParse:
            return "parse-error";
        case ErrorCode::kNotAGenerator:
            return "not-a-generator";
        case ErrorCode::kDimensionTooLarge:
            return "dimension-too-large";
        case ErrorCode::kPairInvariant:
            return "pair-invariant";
        case ErrorCode::kDegenerateInput:
            return "degenerate-input";
        case ErrorCode::kNoPartner:
            return "no-partner";
        case ErrorCode::kSpecMismatch:
            return "spec-mismatch";
        case ErrorCode::kOperatorNotGauge:
            return "operator-not-gauge";
        case ErrorCode::kContainmentViolation:
            return "containment-violation";
        case ErrorCode::kConstructionInconsistency:
            return "construction-inconsistency";
        case ErrorCode::kClassicalLogicalIsGauge:
            return "classical-logical-is-gauge";
        case ErrorCode::kLemmaViolation:
            return "lemma-violation";
        case ErrorCode::kUncorrectableSync:
            return "uncorrectable-sync";
        case ErrorCode::kUsage:
            return "usage";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace qsync
