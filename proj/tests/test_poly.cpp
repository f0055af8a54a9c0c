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

#include <gtest/gtest.h>

#include "degen/oracles.hpp"
#include "degen/poly.hpp"
#include "support.hpp"

using namespace degen;
using degen::testing::L;
using degen::testing::X;

TEST(FallingFactorial, SmallCases) {
  EXPECT_EQ(falling_factorial(0), ring<XPoly>::one());
  EXPECT_EQ(falling_factorial(1), x_symbol());
  EXPECT_EQ(falling_factorial(3), X({L({}), L({2}), L({-3}), L({1})}));
  EXPECT_EQ(to_text(falling_factorial(3)), "x^3 - 3x^2 + 2x");
}

TEST(FallingFactorial, MatchesIntegerExpansion) {
  for (int n = 0; n <= 12; ++n) {
    const auto coeffs = oracle::falling_product_coefficients(n);
    const auto p = falling_factorial(static_cast<std::size_t>(n));
    for (int k = 0; k <= n; ++k) EXPECT_EQ(p[static_cast<std::size_t>(k)], L({coeffs[static_cast<std::size_t>(k)]}));
  }
}

TEST(DegFallingFactorial, SmallCases) {
  EXPECT_EQ(deg_falling_factorial(0), ring<XPoly>::one());
  EXPECT_EQ(deg_falling_factorial(2), X({L({}), L({0, -1}), L({1})}));
  EXPECT_EQ(to_text(deg_falling_factorial(2)), "x^2 - λx");
  EXPECT_EQ(evaluate_at_x(deg_falling_factorial(2), L({1})), L({1, -1}));
}

TEST(DegFallingFactorial, LambdaZeroGivesPowerAndLambdaOneGivesFalling) {
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(specialize(deg_falling_factorial(n), Rational(0)), XPoly::monomial(ring<LambdaPoly>::one(), n));
    EXPECT_EQ(specialize(deg_falling_factorial(n), Rational(1)), falling_factorial(n));
  }
}

TEST(LambdaShiftedFalling, SmallCasesAndGuard) {
  EXPECT_EQ(lambda_shifted_falling(1), L({1}));
  EXPECT_EQ(lambda_shifted_falling(2), L({-1, 1}));
  EXPECT_EQ(lambda_shifted_falling(3), L({2, -3, 1}));
  EXPECT_THROW(lambda_shifted_falling(0), precondition_error);
}

TEST(Specialize, Examples) {
  EXPECT_EQ(specialize(L({1, -1}), Rational(0)), Rational(1));
  EXPECT_EQ(specialize(X({L({}), L({1, -2}), L({1})}), Rational(0), Rational(1)), Rational(2));
  EXPECT_EQ(specialize(L({-1, 1}), Rational(1)), Rational(0));
  EXPECT_EQ(specialize(L({0, 0, 1}), Rational(-3, 2)), Rational(9, 4));
}

TEST(Poly, CanonicalFormTrimsTrailingZeros) {
  EXPECT_TRUE(L({0, 0}).is_zero());
  EXPECT_EQ(L({1, 0, 0}).degree(), 0);
  EXPECT_EQ(LambdaPoly().degree(), -1);
  EXPECT_EQ(L({1, 2}) - L({1, 2}), LambdaPoly());
  EXPECT_EQ(L({3})[7], Rational(0));
}

TEST(Poly, TextForms) {
  EXPECT_EQ(to_text(L({1, -2, 1})), "1 - 2λ + λ^2");
  EXPECT_EQ(to_text(LambdaPoly{Rational(0), Rational(3, 2)}), "(3/2)λ");
  EXPECT_EQ(to_text(LambdaPoly()), "0");
  EXPECT_EQ(to_text(X({L({}), L({1, -2}), L({1})})), "x^2 + (1 - 2λ)x");
  EXPECT_EQ(to_text(X({L({-1})})), "-1");
  EXPECT_EQ(to_text(X({L({}), L({0, -1})})), "-λx");
  EXPECT_EQ(to_text(XPoly{LambdaPoly(Rational(1, 2)), LambdaPoly(Rational(-1, 24))}), "-(1/24)x + 1/2");
}

TEST(ExpandInBasis, RoundTripsThroughFallingBasis) {
  std::vector<XPoly> basis;
  for (std::size_t k = 0; k <= 6; ++k) basis.push_back(deg_falling_factorial(k));
  degen::testing::Gen gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const XPoly p = gen.x_poly(6);
    const auto c = expand_in_basis(p, basis);
    XPoly back;
    for (std::size_t k = 0; k < c.size(); ++k) back += basis[k] * c[k];
    EXPECT_EQ(back, p);
  }
}

TEST(ExpandInBasis, RejectsBadBasis) {
  EXPECT_THROW(expand_in_basis(XPoly::monomial(L({1}), 3), {ring<XPoly>::one(), x_symbol()}), precondition_error);
  EXPECT_THROW(expand_in_basis(x_symbol(), {ring<XPoly>::one(), x_symbol() * Rational(2)}), precondition_error);
}

TEST(PolyProperty, RingAxiomsForLambdaPolys) {
  degen::testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.lambda_poly(), b = gen.lambda_poly(), c = gen.lambda_poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LambdaPoly());
    EXPECT_EQ(a * ring<LambdaPoly>::one(), a);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(PolyProperty, RingAxiomsForXPolys) {
  degen::testing::Gen gen(12);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.x_poly(), b = gen.x_poly(), c = gen.x_poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(PolyProperty, SpecializationIsARingHomomorphism) {
  degen::testing::Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.x_poly(), b = gen.x_poly();
    const Rational lam = gen.rational(), x = gen.rational();
    EXPECT_EQ(specialize(a * b, lam, x), specialize(a, lam, x) * specialize(b, lam, x));
    EXPECT_EQ(specialize(a + b, lam, x), specialize(a, lam, x) + specialize(b, lam, x));
    EXPECT_EQ(specialize(evaluate_at_x(a, LambdaPoly(x)), lam), specialize(a, lam, x));
  }
}
