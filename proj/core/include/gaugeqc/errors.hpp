// Copyright 2026 The gaugeqc Authors
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

namespace gqc {

/// Base class for every error raised by gaugeqc.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// A value violates a documented precondition or type invariant
/// (non-Hermitian, non-unitary, non-unit vector, scalar Dirac operator, ...).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// An internal identity that must hold by construction failed numerically.
class CorruptionError : public Error {
   public:
    using Error::Error;
};

/// A connection was asked to prove its decomposition but carries no witness.
class UnverifiableError : public Error {
   public:
    using Error::Error;
};

/// Malformed external input (JSON files, builtin names).
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace gqc
