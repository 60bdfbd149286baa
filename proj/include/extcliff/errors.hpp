// Copyright 2026 The extcliff Authors
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

namespace extcliff {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed circuit text, task JSON or DIMACS input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  explicit ParseError(const std::string& message) : Error(message), line_(0) {}

  /// 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A task does not belong to the ingredient profile an algorithm requires.
class ProfileError : public Error {
 public:
  using Error::Error;
};

/// Dense evaluation would need more live qubits than the configured limit.
class WidthLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Dense evaluation would explore more measurement branches than allowed.
class BranchLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Conditioning event of a postselected query has probability zero.
class ZeroProbabilityCondition : public Error {
 public:
  using Error::Error;
};

}  // namespace extcliff
