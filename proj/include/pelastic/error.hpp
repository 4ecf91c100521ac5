// Copyright 2026 The pelastic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pelastic {

/// Seconds since the scenario epoch.
using Timestamp = std::int64_t;

enum class ErrorCode {
  kOutOfOrderTimestamp,
  kInvalidValue,
  kUnknownSeries,
  kInvalidArgument,
  kDegenerateWindow,
  kDimensionMismatch,
  kNonFiniteLoss,
  kInsufficientWindow,
  kStaleSample,
  kNoActiveInstance,
  kConfigError,
  kInvalidParams,
  kEmptyInput,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfOrderTimestamp: return "OutOfOrderTimestamp";
    case ErrorCode::kInvalidValue: return "InvalidValue";
    case ErrorCode::kUnknownSeries: return "UnknownSeries";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegenerateWindow: return "DegenerateWindow";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::kInsufficientWindow: return "InsufficientWindow";
    case ErrorCode::kStaleSample: return "StaleSample";
    case ErrorCode::kNoActiveInstance: return "NoActiveInstance";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace pelastic
