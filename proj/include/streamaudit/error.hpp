// Copyright 2026 The streamaudit Authors
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

#ifndef STREAMAUDIT_ERROR_HPP
#define STREAMAUDIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace streamaudit {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  UnsupportedFeature,
  EmptyStream,
  ZeroVariance,
  NotBinary,
  LagTooLarge,
  InvalidRho,
  InvalidModel,
  SchemaMismatch,
  LabelMismatch,
  EmptyLog,
};

std::string_view to_string(ErrorCode code);

/// Base of every error raised by the library. The code is stable and is what
/// the C API reports; the message is for humans.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Malformed input text. `line` is 1-based within the source.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class UnsupportedFeature : public Error {
public:
  UnsupportedFeature(std::size_t line, const std::string& message)
      : Error(ErrorCode::UnsupportedFeature,
              "line " + std::to_string(line) + ": unsupported: " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A prediction log whose true-label column disagrees with the dataset.
/// `index` is the 0-based position of the first disagreement.
class LabelMismatch : public Error {
public:
  LabelMismatch(std::size_t index, const std::string& message)
      : Error(ErrorCode::LabelMismatch, message), index_(index) {}

  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

} // namespace streamaudit

#endif // STREAMAUDIT_ERROR_HPP
