// Copyright 2026 The qcorr Authors
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

namespace qcorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible with the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A matrix expected to be Hermitian is not, beyond tolerance.
class NotHermitian : public Error {
public:
    using Error::Error;
};

/// A family or optimizer parameter lies outside its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A matrix fails density-matrix validation. `invariant()` names the first
/// violated property: "dimensions", "hermiticity", "trace" or "psd".
class NotAState : public Error {
public:
    NotAState(std::string invariant, const std::string& detail)
        : Error(invariant + " invariant violated: " + detail),
          invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

}  // namespace qcorr
