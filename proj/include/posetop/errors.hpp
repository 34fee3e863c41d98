// Copyright 2026 The posetop Authors
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

#ifndef POSETOP_ERRORS_HPP_
#define POSETOP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace posetop {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class RequiresDistinctIndices : public Error {
 public:
  using Error::Error;
};

// Raised when an order cap (word width, enumeration cap) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A documented precondition on operand structure does not hold, e.g. the
// A21 fill required by a boxed insertion.
class PreconditionViolated : public Error {
 public:
  PreconditionViolated(std::string block, std::string expected)
      : Error("precondition violated: " + block + " must be " + expected),
        block_(std::move(block)),
        expected_(std::move(expected)) {}

  const std::string& block() const noexcept { return block_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string block_;
  std::string expected_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Positioned diagnostic from the matrix file parsers. Line and column are
// 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string reason)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(std::move(reason)) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int line_;
  int column_;
  std::string reason_;
};

}  // namespace posetop

#endif  // POSETOP_ERRORS_HPP_
