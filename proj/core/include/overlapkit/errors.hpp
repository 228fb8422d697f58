// Copyright 2026 The overlapkit Authors
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

#include <stdexcept>

namespace overlapkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value or parameter lies outside its admissible range (e.g. a truth value
/// outside [0,1], a non-positive exponent).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an object that does not meet its documented
/// precondition (e.g. inverting a negation that is not strict).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed connective expression or configuration text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace overlapkit
