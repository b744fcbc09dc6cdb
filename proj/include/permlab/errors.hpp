// Copyright 2026 The permlab Authors
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

#ifndef PERMLAB_ERRORS_HPP
#define PERMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permlab {

/// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An index outside the valid range of a matrix, register or table.
class IndexOutOfRange : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

/// A computed result disagrees with an identity that must hold. Exit code 1.
class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A computation hit a configured size guard (state count, qubit count, ...).
class LimitExceeded : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

}  // namespace permlab

#endif  // PERMLAB_ERRORS_HPP
