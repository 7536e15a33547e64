// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxplus {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand shapes do not match (vector lengths, non-square matrix, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

// An operation that needs a finite entry got the all -inf vector.
class ImproperVectorError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

// Caller broke a documented precondition of an algorithm.
class ContractError : public Error {
public:
    using Error::Error;
};

// An enumeration exceeded its configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace maxplus
