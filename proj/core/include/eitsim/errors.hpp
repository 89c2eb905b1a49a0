// Copyright 2026 The eitsim Authors
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

namespace eitsim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value or unknown key. `key()` is the dotted key path
/// (e.g. "doppler.temperature").
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& reason);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class UnknownPreset : public ConfigError {
 public:
  explicit UnknownPreset(const std::string& name);
};

/// Numerical failures in the steady-state / propagation path.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// The trace-constrained Liouvillian is (numerically) singular: the steady
/// manifold is not one-dimensional.
class DegenerateSteadyState : public SolverError {
 public:
  using SolverError::SolverError;
};

class SolverFailure : public SolverError {
 public:
  using SolverError::SolverError;
};

class StepTooLarge : public SolverError {
 public:
  using SolverError::SolverError;
};

class ZeroProbe : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Spectrum analysis errors.
class GridTooNarrow : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A sweep was stopped through its cancellation flag.
class Cancelled : public Error {
 public:
  using Error::Error;
};

}  // namespace eitsim
