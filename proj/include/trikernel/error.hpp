/*
 *   Copyright 2026 The trikernel Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Exception hierarchy shared by every trikernel module.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trikernel {

/** Base class of all errors raised by the kernel. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Operands live in different fields, rings or trifield models. */
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/** The local product was applied to an element with a nonzero even part. */
class SharpOnEvenPart : public Error {
 public:
  SharpOnEvenPart() : Error("local product # applied to an element with nonzero even part") {}
};

class UnclosedTriideal : public Error {
 public:
  UnclosedTriideal() : Error("triideal has not been closed") {}
};

/** Point enumeration requested over an infinite coefficient field. */
class EnumerationUnsupported : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& op) : Error(op + ": zero polynomial") {}
};

/** An exponent left the representable range. */
class Overflow : public Error {
 public:
  using Error::Error;
};

/** A structural invariant (for example V1 subset of V0) does not hold. */
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/** Lexical, syntax, name or grading error in textual input, with 1-based position. */
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace trikernel
