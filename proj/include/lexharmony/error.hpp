// Copyright 2026 The lexharmony Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace lexharmony {

/// Base class for every domain error raised by the library. The code is a
/// stable machine-readable tag used by the CLI and the review API.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("parse_error", "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  explicit ParseError(const std::string& message) : Error("parse_error", message) {}

  /// 1-based line number, 0 when not applicable.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

class EncodingError : public Error {
 public:
  explicit EncodingError(const std::string& message) : Error("encoding_error", message) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("validation_error", message) {}
};

/// Raised when an operation is not legal in the current session state,
/// e.g. mining twice without reviewing the pending report.
class StateError : public Error {
 public:
  explicit StateError(const std::string& message) : Error("state_error", message) {}
};

class ConversionError : public Error {
 public:
  ConversionError(const std::string& message, char32_t codepoint, std::size_t offset)
      : Error("conversion_error", message), codepoint_(codepoint), offset_(offset) {}

  char32_t codepoint() const noexcept { return codepoint_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  char32_t codepoint_;
  std::size_t offset_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io_error", message) {}
};

}  // namespace lexharmony
