// Copyright 2026 The degen Authors
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

#include <initializer_list>
#include <random>
#include <vector>

#include "degen/poly.hpp"
#include "degen/series.hpp"

namespace degen::testing {

/// λ-polynomial from integer coefficients, ascending.
inline LambdaPoly L(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return LambdaPoly(std::move(c));
}

/// x-polynomial from λ-polynomial coefficients, ascending in x.
inline XPoly X(std::initializer_list<LambdaPoly> coeffs) { return XPoly(std::vector<LambdaPoly>(coeffs)); }

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational() {
    const long den = integer(1, 9);
    return Rational(integer(-20, 20), den);
  }
  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (r.is_zero());
    return r;
  }
  LambdaPoly lambda_poly(int max_degree = 3) {
    std::vector<Rational> c;
    const long d = integer(-1, max_degree);
    for (long i = 0; i <= d; ++i) c.push_back(rational());
    return LambdaPoly(std::move(c));
  }
  XPoly x_poly(int max_degree = 3) {
    std::vector<LambdaPoly> c;
    const long d = integer(-1, max_degree);
    for (long i = 0; i <= d; ++i) c.push_back(lambda_poly(2));
    return XPoly(std::move(c));
  }
  /// Delta series: zero constant term, nonzero rational t-coefficient.
  Series<LambdaPoly> delta_series(std::size_t order) {
    std::vector<LambdaPoly> c(order + 1);
    c[1] = LambdaPoly(nonzero_rational());
    for (std::size_t n = 2; n <= order; ++n) c[n] = lambda_poly(1);
    return Series<LambdaPoly>(order, std::move(c));
  }
  /// Invertible series: nonzero rational constant term.
  Series<LambdaPoly> unit_series(std::size_t order) {
    std::vector<LambdaPoly> c(order + 1);
    c[0] = LambdaPoly(nonzero_rational());
    for (std::size_t n = 1; n <= order; ++n) c[n] = lambda_poly(1);
    return Series<LambdaPoly>(order, std::move(c));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace degen::testing
