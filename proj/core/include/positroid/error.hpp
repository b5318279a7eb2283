// Copyright 2023 The Authors.
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

#ifndef POSITROID_ERROR_HPP_
#define POSITROID_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace positroid {

// Raised when well-formed input violates a mathematical precondition,
// e.g. a basis collection that is not a positroid. Malformed input
// (bad JSON, wrong sizes, values out of range) uses std::invalid_argument.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations that must agree did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace positroid

#endif  // POSITROID_ERROR_HPP_
