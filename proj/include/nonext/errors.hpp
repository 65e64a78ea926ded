//------------------------------------------------------------------------------
//
//   Copyright 2026 The nonext Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonext {

/// Bad shapes, mismatched sizes, or values outside a type's invariants.
class ArgumentError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A function evaluated outside its mathematical domain.
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// A generalized-entropy scale function violating its sign conditions.
class InvalidPhiError : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Malformed histogram input. `line()` is 1-based; 0 means "not line specific".
class ParseError : public std::runtime_error
{
public:
  explicit ParseError(std::string const &message, std::size_t line = 0)
    : std::runtime_error(message)
    , line_(line)
  {}

  /// "line N: message"
  static ParseError at_line(std::string const &message, std::size_t line)
  {
    return ParseError("line " + std::to_string(line) + ": " + message, line);
  }

  std::size_t line() const noexcept
  {
    return line_;
  }

private:
  std::size_t line_;
};

}  // namespace nonext
