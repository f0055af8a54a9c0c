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

#include "degen/rational.hpp"
#include "support.hpp"

using degen::Rational;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-7/14"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("0/5"), Rational(0));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1.5", "a", "1/0", "1//2", "--1", " 1"}) {
    EXPECT_THROW(Rational::parse(bad), degen::precondition_error) << bad;
  }
}

TEST(Rational, CanonicalTextForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
  EXPECT_EQ(Rational(0, 3).to_string(), "0");
}

TEST(Rational, ZeroDenominatorAndDivisionRejected) {
  EXPECT_THROW(Rational(1, 0), degen::precondition_error);
  EXPECT_THROW(Rational(0).inverse(), degen::precondition_error);
  EXPECT_THROW(Rational(1) / Rational(0), degen::precondition_error);
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(degen::factorial(0), Rational(1));
  EXPECT_EQ(degen::factorial(10), Rational(3628800));
  EXPECT_EQ(degen::binomial(10, 3), Rational(120));
  EXPECT_EQ(degen::binomial(3, 5), Rational(0));
  // 25! overflows 64 bits; exact arithmetic keeps it.
  EXPECT_EQ(degen::factorial(25).to_string(), "15511210043330985984000000");
}

TEST(RationalProperty, FieldAxiomsOnRandomValues) {
  degen::testing::Gen gen(17);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Rational(1));
    }
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

TEST(RationalProperty, OrderingIsConsistentWithSubtraction) {
  degen::testing::Gen gen(5);
  for (int i = 0; i < 300; ++i) {
    const Rational a = gen.rational(), b = gen.rational();
    EXPECT_EQ(a < b, (b - a) > Rational(0));
  }
}
