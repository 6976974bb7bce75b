// Copyright 2026 The curvlab Authors
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

namespace curvlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions, jet orders or base points do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the domain where a frame or field is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: bad weights, bad FrameSpec, bad grid.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A jet does not carry the derivative orders an operation reads.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// F_{i,j} requested with an index below 1.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Two frames that were supposed to present the same curve do not.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Numerically singular matrix. Carries the reciprocal condition estimate.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double rcond)
      : Error(what), rcond_(rcond) {}
  double rcond() const noexcept { return rcond_; }

 private:
  double rcond_;
};

/// Metric fails to be positive definite (rank-deficient frame).
class PositiveDefinitenessError : public SingularityError {
 public:
  using SingularityError::SingularityError;
};

}  // namespace curvlab
