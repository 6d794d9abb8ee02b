// Copyright 2026 The spinvar Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file error.hpp
 * Exception types shared by every spinvar module.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinvar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad size, index, range).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Text input could not be parsed. `position()` is a 1-based character
/// offset or line number depending on the format.
class ParseError : public Error {
  public:
    ParseError(std::size_t position, const std::string &message)
        : Error(message), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// An iterative eigensolver ran out of iterations. Carries the best
/// Ritz estimates found so far.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string &message, std::vector<double> best)
        : Error(message), best_estimates_(std::move(best)) {}

    [[nodiscard]] const std::vector<double> &best_estimates() const noexcept {
        return best_estimates_;
    }

  private:
    std::vector<double> best_estimates_;
};

/// Requested gradient rule does not apply to the circuit (caller falls back
/// to finite differences).
class UnsupportedGradient : public Error {
  public:
    using Error::Error;
};

} // namespace spinvar
