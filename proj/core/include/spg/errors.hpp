// Copyright 2026 The spg Authors
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

#ifndef SPG_ERRORS_HPP_
#define SPG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// delta_min is undefined: the arena has no random transition at all.
class ArenaHasNoRandomTransitions : public Error {
 public:
  using Error::Error;
};

/// A strategy selects a successor that is not an edge of the arena.
class StrategyEdgeMissing : public Error {
 public:
  using Error::Error;
};

/// The restricted reachability system has no unique solution. This signals
/// an implementation bug, never a property of a valid input.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// An alpha schedule has no value for a priority the arena uses.
class AlphaUndefinedForPriority : public Error {
 public:
  using Error::Error;
};

/// An alpha value lies outside the open interval (0, 1).
class AlphaOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The bound formulas require delta_min in (0, 1/2]; larger values are
/// rejected instead of extrapolated.
class DeltaMinTooLarge : public Error {
 public:
  using Error::Error;
};

/// The pure-strategy product exceeds the configured enumeration cap.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed game document. Carries a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Structurally well-formed document that fails arena/objective validation.
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace spg

#endif  // SPG_ERRORS_HPP_
