// Copyright 2026 The noncon developers
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
#include <string>

namespace noncon {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Malformed Hamiltonian text/JSON, bad Pauli string, inconsistent widths. */
class ParseError : public Error {
 public:
  using Error::Error;
};

/** An operation that requires a noncontextual term set was given a contextual one. */
class ContextualSetError : public Error {
 public:
  using Error::Error;
};

/** A word is outside the closure generated by a decomposition. */
class NotGeneratedError : public Error {
 public:
  using Error::Error;
};

/** Generator list is linearly dependent over GF(2) where independence is required. */
class DependentSetError : public Error {
 public:
  using Error::Error;
};

/** Words were required to commute pairwise and do not. */
class NotCommutingError : public Error {
 public:
  using Error::Error;
};

/** Words were required to anticommute pairwise and do not. */
class NotAnticommutingError : public Error {
 public:
  using Error::Error;
};

/** All coefficients vanished where a nonzero norm was required. */
class AllZeroError : public Error {
 public:
  using Error::Error;
};

/** A reduction plan was requested for a single-term sum; nothing to rotate. */
class SingleWordError : public Error {
 public:
  using Error::Error;
};

/** Input operator must act as a symmetry (Z only) on the named qubits. */
class NonSymmetricInputError : public Error {
 public:
  using Error::Error;
};

/** A configurable resource cap (term count, qubit count, dimension) was hit. */
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/** An iterative numeric routine failed to reach its tolerance. */
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/** Dense operands have mismatched dimensions, or a matrix is not Hermitian. */
class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace noncon
