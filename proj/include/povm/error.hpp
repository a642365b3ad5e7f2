// Copyright 2026 The povmkit Authors
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

namespace povm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation (e.g. d < 2).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Container has the wrong shape (element count, matrix size).
class StructureError : public Error {
  public:
    using Error::Error;
};

class PartitionError : public Error {
  public:
    using Error::Error;
};

/// (d, N, M, x) violates the admissible parameter range.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Operator handed to the Born rule is not a density matrix.
class StateError : public Error {
  public:
    using Error::Error;
};

class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// A necessary-condition check was asked about a POVM outside its regime.
class RegimeError : public Error {
  public:
    using Error::Error;
};

class IndexError : public Error {
  public:
    using Error::Error;
};

/// Eigensolver failure or an internal consistency check that did not hold.
class NumericError : public Error {
  public:
    NumericError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// A construction produced a POVM element that is not positive semidefinite.
class ConstructionError : public Error {
  public:
    ConstructionError(const std::string& what, double min_eigenvalue, int element_index)
        : Error(what), min_eigenvalue_(min_eigenvalue), element_index_(element_index) {}

    double min_eigenvalue() const noexcept { return min_eigenvalue_; }
    /// 1-based position i(alpha, a) of the offending element.
    int element_index() const noexcept { return element_index_; }

  private:
    double min_eigenvalue_;
    int element_index_;
};

}  // namespace povm
