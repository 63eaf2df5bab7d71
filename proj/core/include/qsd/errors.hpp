// Copyright 2026 The qsd developers
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

namespace qsd {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented invariant (non-Hermitian matrix, priors
/// that do not sum to one, negative spectrum where PSD is required, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent matrix or vector dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The requested operation would exceed the configured dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A feature vector cannot be encoded (non-finite component, empty vector).
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Problems with datasets, files, and external inputs.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A mathematically guaranteed relation failed numerically. Treated as a
/// hard error because it signals a broken build or corrupted data.
class NumericalIntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsd
