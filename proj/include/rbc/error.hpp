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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbc {

enum class ErrorCode {
  OutOfRange,
  WidthMismatch,
  ArityMismatch,
  WidthTooLarge,
  LengthMismatch,
  NotComposable,
  NotDecreasing,
  StaleMatch,
  StepLimitExceeded,
  StateLimitExceeded,
  InvalidRule,
  Parse,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the circuit and rule file readers. The code is Parse for
/// syntax errors and OutOfRange for gates that do not fit the width.
/// `line` and `column` are 1-based; `token` is the offending lexeme (empty
/// at end of input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token, const std::string& message,
             ErrorCode code = ErrorCode::Parse);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace rbc
