// Copyright 2026 The jacwit Authors
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

#ifndef JACWIT_ERROR_HPP
#define JACWIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacwit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// poly_core
class DomainError : public Error { using Error::Error; };
class IndexError : public Error { using Error::Error; };
class ArityError : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };

// number_field
class DegenerateModulus : public Error { using Error::Error; };
class DivisionByZero : public Error { using Error::Error; };
class ContextMismatch : public Error { using Error::Error; };

// endo
class InvalidGenerator : public Error { using Error::Error; };
/// Raised for n < 2 or m outside {0, 1}.
class DimensionError : public Error { using Error::Error; };

// witness
class HypothesisViolated : public Error { using Error::Error; };
class JacobianUnit : public Error {
public:
    JacobianUnit()
        : Error("Jacobian is a nonzero constant: no witness exists for this endomorphism") {}
};
class NotNormalized : public Error { using Error::Error; };
class FormatError : public Error { using Error::Error; };

// frontend
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownVariable : public ParseError { using ParseError::ParseError; };

}  // namespace jacwit

#endif  // JACWIT_ERROR_HPP
