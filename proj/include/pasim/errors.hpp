// Copyright 2026 The pasim Authors.
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

namespace pasim {

/// Base class for every error the toolkit raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed values: non-finite reals, negative misalignments, duplicate or
/// missing bids, grids with non-positive step.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Priority vectors of mismatched length.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A realized misalignment above the initial one (the agent never benefits
/// from drifting further away, so such inputs are rejected rather than
/// evaluated).
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// Bad or incomplete configuration: unknown keys, out-of-range parameters,
/// or a payment scheme missing a model it needs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A payment scheme handed to a verifier whose signature it does not fit
/// (e.g. a report-dependent payment in the second-lowest-bid property check).
class UnsupportedSchemeError : public Error {
 public:
  using Error::Error;
};

}  // namespace pasim
