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
#include "degen/triangles.hpp"
#include "support.hpp"

using namespace degen;
using degen::testing::L;

class TrianglesAt12 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    s1 = new Triangle(stirling1_deg(12));
    s2 = new Triangle(stirling2_deg(12));
    j1 = new Triangle(jstirling1(12));
    j2 = new Triangle(jstirling2(12));
  }
  static void TearDownTestSuite() {
    delete s1;
    delete s2;
    delete j1;
    delete j2;
  }
  static inline Triangle* s1 = nullptr;
  static inline Triangle* s2 = nullptr;
  static inline Triangle* j1 = nullptr;
  static inline Triangle* j2 = nullptr;
};

TEST_F(TrianglesAt12, Stirling2Examples) {
  EXPECT_EQ(s2->at(2, 1), L({1, -1}));
  EXPECT_EQ(s2->at(3, 2), L({3, -3}));
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(s2->at(n, n), L({1}));
}

TEST_F(TrianglesAt12, Stirling1Examples) {
  EXPECT_EQ(s1->at(2, 1), L({-1, 1}));
  EXPECT_EQ(s1->at(3, 2), L({-3, 3}));
  EXPECT_EQ(specialize(s1->at(3, 2), Rational(0)), Rational(-3));
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(s1->at(n, 1), lambda_shifted_falling(n));
}

TEST_F(TrianglesAt12, JindalraeStirlingExamples) {
  EXPECT_EQ(j2->at(2, 1), L({2, -2}));
  EXPECT_EQ(j1->at(2, 1), L({-2, 2}));
  EXPECT_TRUE(j2->at(3, 5).is_zero());
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(j1->at(n, n), L({1}));
}

TEST_F(TrianglesAt12, OrthogonalityBothWays) {
  EXPECT_EQ(lower_product(s1->rows(), s2->rows()), identity_matrix(12));
  EXPECT_EQ(lower_product(s2->rows(), s1->rows()), identity_matrix(12));
}

TEST_F(TrianglesAt12, LambdaDegreeBoundedByNMinusK) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_LE(s2->at(n, k).degree(), static_cast<int>(n - k));
      EXPECT_LE(s1->at(n, k).degree(), static_cast<int>(n - k));
    }
  }
}

TEST_F(TrianglesAt12, LambdaOneCollapsesFirstKindToIdentity) {
  EXPECT_EQ(specialize(s1->rows(), Rational(1)), specialize(identity_matrix(12), Rational(1)));
}

TEST_F(TrianglesAt12, LambdaZeroMatchesOracles) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto nn = static_cast<std::size_t>(n), kk = static_cast<std::size_t>(k);
      EXPECT_EQ(specialize(s2->at(nn, kk), Rational(0)), Rational(oracle::partition_oracle(n, k)));
      EXPECT_EQ(specialize(s1->at(nn, kk), Rational(0)), Rational(oracle::signed_cycle_oracle(n, k)));
    }
  }
}

TEST(Triangles, SeriesAndBasisRoutesAgree) {
  EXPECT_EQ(routes::stirling2_deg_series(10), routes::stirling2_deg_basis(10));
  EXPECT_EQ(routes::stirling1_deg_series(10), routes::stirling1_deg_basis(10));
}

TEST(Triangles, RequireAgreementNamesTheEntry) {
  auto a = identity_matrix(3);
  auto b = a;
  b[2][1] = L({7});
  try {
    require_agreement("demo", a, b);
    FAIL();
  } catch (const route_mismatch& e) {
    EXPECT_NE(std::string(e.what()).find("(2,1)"), std::string::npos) << e.what();
  }
}

TEST(Triangles, OutOfOrderAccessIsAnError) {
  const auto t = stirling2_deg(3);
  EXPECT_THROW(t.at(4, 1), std::out_of_range);
  EXPECT_TRUE(t.at(2, 3).is_zero());
}

TEST(Triangles, KindNamesRoundTrip) {
  for (auto k : {TriangleKind::S1Classical, TriangleKind::S2Classical, TriangleKind::S1Deg, TriangleKind::S2Deg,
                 TriangleKind::J1Deg, TriangleKind::J2Deg, TriangleKind::TCompose}) {
    EXPECT_EQ(parse_triangle_kind(name(k)), k);
    EXPECT_EQ(make_triangle(k, 3).kind(), k);
  }
  EXPECT_FALSE(parse_triangle_kind("s3").has_value());
}

TEST(Classical, Examples) {
  const auto [s1, s2] = classical_triangles(6);
  EXPECT_EQ(s2.at(3, 2), L({3}));
  EXPECT_EQ(s1.at(3, 2), L({-3}));
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(s2.at(n, 1), L({1}));
}

TEST(TNumbers, Examples) {
  const auto t = t_numbers(10);
  EXPECT_EQ(t.at(2, 1), L({2}));
  EXPECT_EQ(t.at(3, 1), L({5}));
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(t.at(static_cast<std::size_t>(n), 1), L({oracle::bell_number_classical(n)}));
  }
}

TEST(TNumbers, MultinomialRouteAgreesUpToEight) {
  const auto t = t_numbers(8);
  EXPECT_EQ(t.rows(), routes::t_numbers_multinomial(8));
  EXPECT_EQ(t.rows(), routes::t_numbers_series(8));
  EXPECT_THROW(routes::t_numbers_multinomial(9), precondition_error);
}

TEST(Korobov, Examples) {
  for (std::size_t r = 1; r <= 4; ++r) EXPECT_EQ(korobov(5, r).at(0), L({1}));
  EXPECT_EQ(korobov(3, 2).at(1), L({1, -1}));
  EXPECT_THROW(korobov(3, 0), precondition_error);
  EXPECT_THROW(korobov(3, 1).at(4), std::out_of_range);
}

TEST(DegBernoulli, Examples) {
  for (std::size_t r = 1; r <= 4; ++r) EXPECT_EQ(deg_bernoulli(5, r).at(0), L({1}));
  EXPECT_EQ(deg_bernoulli(3, 2).at(1), L({-1, 1}));
  EXPECT_THROW(deg_bernoulli(3, 0), precondition_error);
}

TEST(DegBernoulli, LambdaZeroGivesClassicalBernoulliNumbers) {
  // t/(e^t - 1): 1, -1/2, 1/6, 0, -1/30, 0, 1/42.
  const auto b = deg_bernoulli(6, 1);
  const std::vector<Rational> expected{Rational(1), Rational(-1, 2), Rational(1, 6), Rational(0),
                                       Rational(-1, 30), Rational(0), Rational(1, 42)};
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(specialize(b.at(n), Rational(0)), expected[n]);
}

TEST(Korobov, ReciprocalIdentitiesAtOrderTen) {
  const auto s1 = stirling1_deg(10);
  const auto s2 = stirling2_deg(10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto k_n = korobov(10, n);
    const auto b_n = deg_bernoulli(10, n);
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(s2.at(n, k), k_n.at(n - k) * binomial(n - 1, k - 1));
      EXPECT_EQ(s1.at(n, k), b_n.at(n - k) * binomial(n - 1, k - 1));
    }
  }
}

TEST(TriangleProperty, RandomLambdaSpecializationPreservesOrthogonality) {
  degen::testing::Gen gen(31);
  const auto s1 = stirling1_deg(8).rows();
  const auto s2 = stirling2_deg(8).rows();
  for (int trial = 0; trial < 10; ++trial) {
    const Rational lam = gen.rational();
    EXPECT_EQ(lower_product(specialize(s1, lam), specialize(s2, lam)), specialize(identity_matrix(8), lam));
  }
}
