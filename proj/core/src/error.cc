// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/error.h"

namespace posediv {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDegeneratePose: return "degenerate_pose";
    case ErrorCode::kUndefinedFacing: return "undefined_facing";
    case ErrorCode::kProjection: return "projection";
    case ErrorCode::kSampling: return "sampling";
    case ErrorCode::kTraining: return "training";
    case ErrorCode::kBudgetExhausted: return "budget_exhausted";
    case ErrorCode::kNotInSet: return "not_in_set";
    case ErrorCode::kEnumerationGuard: return "enumeration_guard";
    case ErrorCode::kPlacement: return "placement";
    case ErrorCode::kAdapter: return "adapter";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kRange: return "range";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace posediv
