// Copyright 2026 The qdiscord Authors
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

#ifndef QDISCORD_ERROR_H
#define QDISCORD_ERROR_H

#include <stdexcept>
#include <string>

namespace qdiscord {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Shapes, party indices or subsets that do not fit together.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A value that is structurally fine but violates a physical or algebraic
/// constraint (Hermiticity, trace, positivity, isometry rows, ...).
class ValidationError : public Error {
   public:
    ValidationError(std::string check, const std::string &detail)
        : Error(check + ": " + detail), check_(std::move(check)) {}

    /// Short name of the failed check, e.g. "hermiticity" or "trace".
    const std::string &check() const noexcept { return check_; }

   private:
    std::string check_;
};

/// Malformed input text (state files, Pauli tables, CLI values).
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace qdiscord

#endif
