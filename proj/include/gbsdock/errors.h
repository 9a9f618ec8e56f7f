// Copyright 2026 The gbsdock Authors
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

#ifndef GBSDOCK_ERRORS_H
#define GBSDOCK_ERRORS_H

#include <stdexcept>
#include <string>

namespace gbsdock {

/// Bad input: malformed files, out-of-range parameters, violated preconditions.
/// The CLI maps this family to exit code 2.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class InvalidVertexError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class DimensionError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Input is well formed but too large for an exhaustive routine.
class SizeError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// A computation produced a value outside its mathematically valid range, or a
/// search failed to converge. The CLI maps this family to exit code 3.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class EncodingError : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

}  // namespace gbsdock

#endif  // GBSDOCK_ERRORS_H
