// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posediv {

enum class ErrorCode {
  kInvalidArgument,
  kDegeneratePose,
  kUndefinedFacing,
  kProjection,
  kSampling,
  kTraining,
  kBudgetExhausted,
  kNotInSet,
  kEnumerationGuard,
  kPlacement,
  kAdapter,
  kParse,
  kRange,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as posediv::Error. The code is stable and
// machine readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace posediv
