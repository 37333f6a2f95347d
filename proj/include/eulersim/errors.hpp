// Copyright 2026 The eulersim Authors
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

namespace eulersim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operator too large for the dense carrier.
class DimensionLimitError : public Error {
 public:
  using Error::Error;
};

/// Mismatched qubit counts or matrix shapes.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/// Group closure grew past the configured maximum order.
class ClosureOverflowError : public Error {
 public:
  using Error::Error;
};

/// A target Hamiltonian is not reachable with nonnegative weights.
/// `residual()` is the nonnegative least-squares residual of the
/// reachability system, as a diagnostic.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Invalid argument or configuration value (bad preset name, negative
/// duration, malformed file, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical procedure did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulersim
