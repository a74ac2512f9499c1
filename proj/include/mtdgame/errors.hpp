// Copyright 2026 The mtdgame Authors
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

#include <stdexcept>
#include <string>

namespace mtdgame {

// Malformed input file (syntax, schema, unknown fields).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid attack graph or scenario.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value outside its permitted range (e.g. CIA score).
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration, e.g. a discount factor the solver cannot use.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lookup of a node id, vulnerability key or action that does not exist.
class UnknownKeyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure inside a solver (should not happen on finite input).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mtdgame
