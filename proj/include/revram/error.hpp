// Copyright 2026 The revram Authors. All rights reserved.
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

namespace revram {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unknown gate name or mnemonic.
class CatalogError : public Error {
public:
  using Error::Error;
};

/// Malformed arguments: index out of range, width mismatch, bad assignment.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A parameter exceeds a documented desk-scale bound.
class BoundsError : public Error {
public:
  using Error::Error;
};

/// Diagnostic from the netlist text parser, positioned at line:column (1-based).
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace revram
