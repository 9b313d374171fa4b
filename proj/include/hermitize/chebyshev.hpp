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

#include <span>
#include <vector>

#include "hermitize/types.hpp"

namespace hermitize {

/// Chebyshev polynomial of the first kind, T_k(y), by three-term recurrence.
Complex eval_T(int k, Complex y);

/// Chebyshev polynomial of the second kind, U_k(y). U_{-1} = 0.
Complex eval_U(int k, Complex y);

/// Real linear combination sum_k c_k U_k(y).
///
/// Trailing coefficients with magnitude at most 1e-300 are trimmed on
/// construction so that the leading coefficient is nonzero. The all-zero
/// combination is rejected.
class ChebCombo {
 public:
  explicit ChebCombo(std::vector<double> coefficients);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const double> coefficients() const { return coefficients_; }

  /// Leading coefficient in the monomial basis, c_d 2^d.
  double leading_monomial_coefficient() const;

 private:
  std::vector<double> coefficients_;
};

struct ComboValue {
  Complex value;
  Complex derivative;
  /// Sum over the Clenshaw steps of the magnitudes of that step's terms,
  /// each weighted by |U_k(y)|; bounds the rounding noise in `value` up to
  /// a small multiple of eps.
  double magnitude = 0.0;
};

/// Clenshaw evaluation of the combination and its derivative.
ComboValue eval_combo(const ChebCombo& p, Complex y);

}  // namespace hermitize
