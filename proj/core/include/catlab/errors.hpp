// Copyright 2026 The catlab Authors
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

namespace catlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Fock cutoff is too small to hold the requested state.
class CutoffError : public Error {
 public:
  using Error::Error;
};

/// Operands live in spaces of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An index or parameter lies outside its documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A moment order p + q above the supported maximum was requested.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// A measurement-conditioned state has (numerically) zero probability.
class DegenerateOutcomeError : public Error {
 public:
  using Error::Error;
};

/// A time-stepping propagator was asked to take steps that are too coarse.
class StabilityError : public Error {
 public:
  using Error::Error;
};

/// Physical parameters or a state violate their invariants.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace catlab
