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

#include "hermitize/chebyshev.hpp"

#include <cmath>
#include <vector>

#include "hermitize/errors.hpp"

namespace hermitize {

Complex eval_T(int k, Complex y) {
  if (k < 0) throw InvalidArgument("T_k requires k >= 0");
  if (k == 0) return 1.0;
  Complex prev = 1.0;
  Complex cur = y;
  for (int j = 1; j < k; ++j) {
    const Complex next = 2.0 * y * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex eval_U(int k, Complex y) {
  if (k < -1) throw InvalidArgument("U_k requires k >= -1");
  if (k == -1) return 0.0;
  Complex prev = 0.0;  // U_{-1}
  Complex cur = 1.0;
  for (int j = 0; j < k; ++j) {
    const Complex next = 2.0 * y * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChebCombo::ChebCombo(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && std::abs(coefficients_.back()) <= 1e-300)
    coefficients_.pop_back();
  if (coefficients_.empty()) throw InvalidArgument("Chebyshev combination is identically zero");
}

double ChebCombo::leading_monomial_coefficient() const {
  return std::ldexp(coefficients_.back(), degree());
}

// b_k = c_k + 2y b_{k+1} - b_{k+2}; the U-basis sum is b_0 because U_1 = 2y U_0.
// Differentiating the recurrence gives b'_k = 2 b_{k+1} + 2y b'_{k+1} - b'_{k+2}.
ComboValue eval_combo(const ChebCombo& p, Complex y) {
  const auto c = p.coefficients();
  const int d = p.degree();
  const Complex two_y = 2.0 * y;

  // A rounding error made while forming b_k reaches the result multiplied
  // by U_k(y), so each step's terms are weighted by |U_k(y)|.
  std::vector<double> weight(static_cast<std::size_t>(d) + 1);
  Complex u_prev = 0.0, u_cur = 1.0;
  for (int k = 0; k <= d; ++k) {
    weight[k] = std::abs(u_cur);
    const Complex u_next = two_y * u_cur - u_prev;
    u_prev = u_cur;
    u_cur = u_next;
  }

  Complex b1 = 0.0, b2 = 0.0;
  Complex d1 = 0.0, d2 = 0.0;
  double magnitude = 0.0;
  for (int k = d; k >= 0; --k) {
    const Complex step = two_y * b1;
    const Complex b0 = c[k] + step - b2;
    const Complex d0 = 2.0 * b1 + two_y * d1 - d2;
    magnitude += (std::abs(c[k]) + std::abs(step) + std::abs(b2)) * weight[k];
    b2 = b1;
    b1 = b0;
    d2 = d1;
    d1 = d0;
  }
  return {b1, d1, magnitude};
}

}  // namespace hermitize
