// Copyright 2026 The rbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rbc/error.hpp"

#include <utility>

namespace rbc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::WidthTooLarge: return "WidthTooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotDecreasing: return "NotDecreasing";
    case ErrorCode::StaleMatch: return "StaleMatch";
    case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::StateLimitExceeded: return "StateLimitExceeded";
    case ErrorCode::InvalidRule: return "InvalidRule";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, std::string token,
                       const std::string& message, ErrorCode code)
    : Error(code, message), line_(line), column_(column), token_(std::move(token)) {}

}  // namespace rbc
