// Copyright 2026 The smoothprep Authors
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

#ifndef SMOOTHPREP_ERRORS_H_
#define SMOOTHPREP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace smoothprep {

// Bad parameters (epsilon out of range, malformed generator spec, too few
// trials, ...) are reported with std::invalid_argument. The classes below
// cover the failures that are properties of the data or the environment.

/// The input is valid syntax but the requested computation is undefined or
/// impossible for it.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All entries are zero, so post-selection (or l2 sampling) can never succeed.
class ZeroVectorError : public DomainError {
 public:
  ZeroVectorError() : DomainError("zero vector: preparation is impossible") {}
};

/// The expected runtime of the requested estimate is infinite.
class DivergentMeanError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An entry lies outside [-1, 1].
class OutOfRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A post-hoc check showed that a caller-supplied bound did not hold, e.g. the
/// fixed-point amplifier missed its guarantee because lambda_min was not a
/// lower bound on the success probability.
class PreconditionViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The rejection sampler hit its read budget.
class QueryBudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Unreadable file or unparsable file contents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace smoothprep

#endif  // SMOOTHPREP_ERRORS_H_
