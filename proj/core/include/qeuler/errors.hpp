// Copyright 2026 The qeuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Base class for all qeuler exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid inputs: out-of-domain arguments, poles, division by zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Mixing float-backend and exact-backend values in one operation.
class BackendMismatchError : public Error {
 public:
  using Error::Error;
};

/// An exponent of q that does not land on the chosen root lattice, i.e.
/// e * scale * D is not an integer on the exact backend.
class UnrepresentableError : public Error {
 public:
  using Error::Error;
};

/// A truncated series whose tail bound did not reach the requested
/// tolerance within the term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A complex power whose base lies on the principal-branch cut
/// (the closed negative real axis). Rejected rather than silently computed.
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qeuler
