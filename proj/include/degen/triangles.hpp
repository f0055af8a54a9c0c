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

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/oracles.hpp"
#include "degen/poly.hpp"
#include "degen/series.hpp"

namespace degen {

/// Lower-triangular table; row n holds entries k = 0..n.
using LowerMatrix = std::vector<std::vector<LambdaPoly>>;

/// (a*b)(n,k) = sum_{m=k}^{n} a(n,m) b(m,k).
inline LowerMatrix lower_product(const LowerMatrix& a, const LowerMatrix& b) {
  const std::size_t rows = std::min(a.size(), b.size());
  LowerMatrix out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    out[n].resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      LambdaPoly acc;
      for (std::size_t m = k; m <= n; ++m) {
        if (a[n][m].is_zero() || b[m][k].is_zero()) continue;
        acc += a[n][m] * b[m][k];
      }
      out[n][k] = std::move(acc);
    }
  }
  return out;
}

inline LowerMatrix identity_matrix(std::size_t order) {
  LowerMatrix out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    out[n].resize(n + 1);
    out[n][n] = ring<LambdaPoly>::one();
  }
  return out;
}

/// First (n,k), in row-major order, where two tables differ.
inline std::optional<std::pair<std::size_t, std::size_t>> first_difference(const LowerMatrix& a,
                                                                            const LowerMatrix& b) {
  const std::size_t rows = std::max(a.size(), b.size());
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const LambdaPoly lhs = n < a.size() ? a[n][k] : LambdaPoly{};
      const LambdaPoly rhs = n < b.size() ? b[n][k] : LambdaPoly{};
      if (lhs != rhs) return std::pair{n, k};
    }
  }
  return std::nullopt;
}

enum class TriangleKind { S1Classical, S2Classical, S1Deg, S2Deg, J1Deg, J2Deg, TCompose };

inline std::string_view name(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::S1Classical: return "s1";
    case TriangleKind::S2Classical: return "s2";
    case TriangleKind::S1Deg: return "s1deg";
    case TriangleKind::S2Deg: return "s2deg";
    case TriangleKind::J1Deg: return "j1deg";
    case TriangleKind::J2Deg: return "j2deg";
    case TriangleKind::TCompose: return "t";
  }
  return "?";
}

inline std::optional<TriangleKind> parse_triangle_kind(std::string_view text) {
  for (auto k : {TriangleKind::S1Classical, TriangleKind::S2Classical, TriangleKind::S1Deg, TriangleKind::S2Deg,
                 TriangleKind::J1Deg, TriangleKind::J2Deg, TriangleKind::TCompose}) {
    if (name(k) == text) return k;
  }
  return std::nullopt;
}

/// A named number triangle, entries (n,k) for 0 <= k <= n <= order.
class Triangle {
 public:
  Triangle(TriangleKind kind, LowerMatrix rows) : kind_(kind), rows_(std::move(rows)) {
    if (rows_.empty()) throw precondition_error("Triangle: needs at least row 0");
    for (std::size_t n = 0; n < rows_.size(); ++n) rows_[n].resize(n + 1);
  }

  TriangleKind kind() const { return kind_; }
  std::size_t order() const { return rows_.size() - 1; }
  const LowerMatrix& rows() const { return rows_; }

  /// Entry (n,k); zero when k > n. Rows past the stored order are an error.
  const LambdaPoly& at(std::size_t n, std::size_t k) const {
    static const LambdaPoly zero{};
    if (n > order()) {
      throw std::out_of_range(std::string(name(kind_)) + ": row " + std::to_string(n) + " beyond stored order " +
                              std::to_string(order()));
    }
    return k > n ? zero : rows_[n][k];
  }

  friend bool operator==(const Triangle& a, const Triangle& b) { return a.kind_ == b.kind_ && a.rows_ == b.rows_; }

 private:
  TriangleKind kind_;
  LowerMatrix rows_;
};

/// Throws route_mismatch naming the first disagreeing entry.
inline void require_agreement(std::string_view what, const LowerMatrix& a, const LowerMatrix& b) {
  if (auto d = first_difference(a, b)) {
    const auto [n, k] = *d;
    const auto entry = [&](const LowerMatrix& m) { return n < m.size() ? to_text(m[n][k]) : std::string("<missing>"); };
    throw route_mismatch(std::string(what) + ": routes disagree at (n,k)=(" + std::to_string(n) + "," +
                         std::to_string(k) + "): " + entry(a) + " vs " + entry(b));
  }
}

// Routes --------------------------------------------------------------------

/// rows[n][k] = n! [t^n] f(t)^k / k!  for a delta series f.
inline LowerMatrix series_columns(const Series<LambdaPoly>& f) {
  const std::size_t N = f.order();
  LowerMatrix rows(N + 1);
  for (std::size_t n = 0; n <= N; ++n) rows[n].resize(n + 1);
  Series<LambdaPoly> column = Series<LambdaPoly>::one(N);
  for (std::size_t k = 0; k <= N; ++k) {
    for (std::size_t n = k; n <= N; ++n) rows[n][k] = column.egf_coeff(n);
    column = column * f * Rational(1, static_cast<long>(k + 1));
  }
  return rows;
}

/// Connection coefficients: rows[n][k] with source(n) = sum_k rows[n][k] * target(k).
inline LowerMatrix basis_change(std::size_t order, const std::function<XPoly(std::size_t)>& source,
                                const std::function<XPoly(std::size_t)>& target) {
  std::vector<XPoly> basis;
  for (std::size_t k = 0; k <= order; ++k) basis.push_back(target(k));
  LowerMatrix rows(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    rows[n] = expand_in_basis(source(n), basis);
    rows[n].resize(n + 1);
  }
  return rows;
}

namespace routes {

inline LowerMatrix stirling2_deg_series(std::size_t N) { return series_columns(deg_exp_minus_one(N)); }
inline LowerMatrix stirling2_deg_basis(std::size_t N) {
  return basis_change(N, deg_falling_factorial, falling_factorial);
}
inline LowerMatrix stirling1_deg_series(std::size_t N) { return series_columns(deg_log(N)); }
inline LowerMatrix stirling1_deg_basis(std::size_t N) {
  return basis_change(N, falling_factorial, deg_falling_factorial);
}
inline LowerMatrix jstirling2_series(std::size_t N) { return series_columns(iterated_deg_exp(N)); }
inline LowerMatrix jstirling1_series(std::size_t N) { return series_columns(iterated_deg_log(N)); }
inline LowerMatrix t_numbers_series(std::size_t N) { return series_columns(compose(exp_minus_one(N), exp_minus_one(N))); }

/// (1/k!) sum over compositions n = n_1+...+n_k (positive parts) of
/// multinomial(n; n_1..n_k) B_{n_1}...B_{n_k}, with Bell numbers from the
/// partition oracle.
inline LowerMatrix t_numbers_multinomial(std::size_t N) {
  if (N > 8) throw precondition_error("t_numbers_multinomial: limited to n <= 8");
  std::vector<Rational> bell(N + 1);
  for (std::size_t i = 0; i <= N; ++i) bell[i] = Rational(oracle::bell_number_classical(static_cast<int>(i)));
  LowerMatrix rows(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    rows[n].resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational sum;
      // remaining: amount left to distribute, parts: parts left, term: running product
      std::function<void(std::size_t, std::size_t, Rational)> walk = [&](std::size_t remaining, std::size_t parts,
                                                                        Rational term) {
        if (parts == 0) {
          if (remaining == 0) sum += term;
          return;
        }
        for (std::size_t part = 1; part + (parts - 1) <= remaining; ++part) {
          walk(remaining - part, parts - 1, term * bell[part] * factorial(part).inverse());
        }
      };
      walk(n, k, factorial(n));
      rows[n][k] = LambdaPoly(sum * factorial(k).inverse());
    }
  }
  return rows;
}

}  // namespace routes

/// Degenerate Stirling numbers of the second kind, S_{2,λ}(n,k).
inline Triangle stirling2_deg(std::size_t N) {
  auto a = routes::stirling2_deg_series(N);
  require_agreement("stirling2_deg", a, routes::stirling2_deg_basis(N));
  return Triangle(TriangleKind::S2Deg, std::move(a));
}

/// Degenerate Stirling numbers of the first kind, S_{1,λ}(n,k).
inline Triangle stirling1_deg(std::size_t N) {
  auto a = routes::stirling1_deg_series(N);
  require_agreement("stirling1_deg", a, routes::stirling1_deg_basis(N));
  return Triangle(TriangleKind::S1Deg, std::move(a));
}

/// Jindalrae-Stirling numbers of the second kind: series extraction checked
/// against the self-convolution of S_{2,λ}.
inline Triangle jstirling2(std::size_t N) {
  auto a = routes::jstirling2_series(N);
  const auto s2 = stirling2_deg(N);
  require_agreement("jstirling2", a, lower_product(s2.rows(), s2.rows()));
  return Triangle(TriangleKind::J2Deg, std::move(a));
}

/// Jindalrae-Stirling numbers of the first kind.
inline Triangle jstirling1(std::size_t N) {
  auto a = routes::jstirling1_series(N);
  const auto s1 = stirling1_deg(N);
  require_agreement("jstirling1", a, lower_product(s1.rows(), s1.rows()));
  return Triangle(TriangleKind::J1Deg, std::move(a));
}

inline LowerMatrix specialize(const LowerMatrix& m, const Rational& lambda) {
  LowerMatrix out(m.size());
  for (std::size_t n = 0; n < m.size(); ++n)
    for (const auto& e : m[n]) out[n].emplace_back(specialize(e, lambda));
  return out;
}

/// Classical signed S_1 and S_2 as the λ = 0 specializations of the degenerate
/// triangles, checked against the brute-force oracles for n <= 10.
inline std::pair<Triangle, Triangle> classical_triangles(std::size_t N) {
  auto s1 = specialize(stirling1_deg(N).rows(), Rational(0));
  auto s2 = specialize(stirling2_deg(N).rows(), Rational(0));
  const std::size_t limit = std::min<std::size_t>(N, 10);
  LowerMatrix o1(limit + 1), o2(limit + 1);
  for (std::size_t n = 0; n <= limit; ++n) {
    const auto counts = oracle::partition_counts(static_cast<int>(n));
    const auto falling = oracle::falling_product_coefficients(static_cast<int>(n));
    for (std::size_t k = 0; k <= n; ++k) {
      o1[n].emplace_back(Rational(falling[k]));
      o2[n].emplace_back(Rational(counts[k]));
    }
  }
  require_agreement("classical S1 vs signed cycle oracle", LowerMatrix(s1.begin(), s1.begin() + static_cast<long>(limit) + 1), o1);
  require_agreement("classical S2 vs partition oracle", LowerMatrix(s2.begin(), s2.begin() + static_cast<long>(limit) + 1), o2);
  return {Triangle(TriangleKind::S1Classical, std::move(s1)), Triangle(TriangleKind::S2Classical, std::move(s2))};
}

/// T(n,k): the convolution of classical S_2 with itself, checked against the
/// EGF of (e^{e^t-1}-1)^k/k! and, for n <= 8, the multinomial Bell sum.
inline Triangle t_numbers(std::size_t N) {
  const auto s2 = classical_triangles(N).second;
  auto a = lower_product(s2.rows(), s2.rows());
  require_agreement("t_numbers series", a, routes::t_numbers_series(N));
  const std::size_t m = std::min<std::size_t>(N, 8);
  require_agreement("t_numbers multinomial", LowerMatrix(a.begin(), a.begin() + static_cast<long>(m) + 1),
                    routes::t_numbers_multinomial(m));
  return Triangle(TriangleKind::TCompose, std::move(a));
}

inline Triangle make_triangle(TriangleKind kind, std::size_t N) {
  switch (kind) {
    case TriangleKind::S1Classical: return classical_triangles(N).first;
    case TriangleKind::S2Classical: return classical_triangles(N).second;
    case TriangleKind::S1Deg: return stirling1_deg(N);
    case TriangleKind::S2Deg: return stirling2_deg(N);
    case TriangleKind::J1Deg: return jstirling1(N);
    case TriangleKind::J2Deg: return jstirling2(N);
    case TriangleKind::TCompose: return t_numbers(N);
  }
  throw precondition_error("unknown triangle kind");
}

// Korobov / degenerate Bernoulli numbers of order r -------------------------

enum class SliceKind { Korobov, DegBernoulli };

inline std::string_view name(SliceKind kind) { return kind == SliceKind::Korobov ? "korobov" : "degbernoulli"; }

/// The sequence value(n), n = 0..order, of a number family of fixed order r.
struct NumberSlice {
  SliceKind kind;
  std::size_t r;
  std::vector<LambdaPoly> values;

  std::size_t order() const { return values.size() - 1; }
  const LambdaPoly& at(std::size_t n) const {
    if (n > order()) throw std::out_of_range(std::string(name(kind)) + ": index beyond stored order");
    return values[n];
  }
};

namespace detail {

inline NumberSlice reciprocal_power_slice(SliceKind kind, const Series<LambdaPoly>& delta, std::size_t r) {
  if (r == 0) throw precondition_error(std::string(name(kind)) + ": order r must be positive");
  const auto p = power(mul_inverse(shift_down(delta)), r);
  NumberSlice out{kind, r, {}};
  for (std::size_t n = 0; n <= p.order(); ++n) out.values.push_back(p.egf_coeff(n));
  return out;
}

}  // namespace detail

/// K_{n,(r)}(λ): EGF coefficients of (t / log_λ(1+t))^r.
inline NumberSlice korobov(std::size_t N, std::size_t r) {
  return detail::reciprocal_power_slice(SliceKind::Korobov, deg_log(N + 1), r);
}

/// β_{n,(r)}(λ): EGF coefficients of (t / (e_λ(t) - 1))^r.
inline NumberSlice deg_bernoulli(std::size_t N, std::size_t r) {
  return detail::reciprocal_power_slice(SliceKind::DegBernoulli, deg_exp_minus_one(N + 1), r);
}

inline std::optional<SliceKind> parse_slice_kind(std::string_view text) {
  if (text == "korobov") return SliceKind::Korobov;
  if (text == "degbernoulli") return SliceKind::DegBernoulli;
  return std::nullopt;
}

inline NumberSlice make_slice(SliceKind kind, std::size_t N, std::size_t r) {
  return kind == SliceKind::Korobov ? korobov(N, r) : deg_bernoulli(N, r);
}

}  // namespace degen
