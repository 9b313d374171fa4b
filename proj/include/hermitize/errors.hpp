/* Copyright 2026 The Hermitize Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hermitize/types.hpp"

namespace hermitize {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on the pole of the end-point coupling, zeta = 1 with xi = 0.
class SingularParameters : public Error {
 public:
  using Error::Error;
};

/// Raised by the iterative solvers. Carries the best iterate reached.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, std::vector<Complex> best = {})
      : Error(what), best_iterate_(std::move(best)) {}

  const std::vector<Complex>& best_iterate() const { return best_iterate_; }

 private:
  std::vector<Complex> best_iterate_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Precondition violation on an argument (n < 2, empty grid, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hermitize
