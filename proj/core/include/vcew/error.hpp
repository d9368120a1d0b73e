// Copyright 2026 The vcew Authors
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

#ifndef VCEW_ERROR_HPP
#define VCEW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vcew {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, invalid family parameters,
/// graphs outside an operation's domain (disconnected, too small).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Text input (edge lists, weightings, family specs) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A constructor's structural hypothesis does not hold for the input graph.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The exhaustive search was refused because the instance exceeds the
/// configured size guard.
class SearchGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// No proper weighting exists for any k up to the cap. On a connected graph
/// with at least three vertices this contradicts the known bound of 5.
class NotFoundWithinCap : public Error {
 public:
  using Error::Error;
};

/// A construction or claim produced an outcome that its argument rules out,
/// e.g. an improper weighting from a pattern that should always be proper.
class ProofViolation : public Error {
 public:
  using Error::Error;
};

/// The set of end-edge weight pairs of a path fits none of the expected
/// categories.
class Inconsistent : public ProofViolation {
 public:
  using ProofViolation::ProofViolation;
};

}  // namespace vcew

#endif  // VCEW_ERROR_HPP
