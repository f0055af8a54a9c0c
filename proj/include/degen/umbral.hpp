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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/families.hpp"
#include "degen/poly.hpp"
#include "degen/series.hpp"
#include "degen/triangles.hpp"

namespace degen {

/// A Sheffer sequence s_n(x) ~ (g(t), f(t)) held as its lower-triangular
/// coefficient matrix, s_n(x) = sum_k coeffs[n][k] x^k, together with the
/// defining pair. g is invertible (order 0), f is a delta series (order 1).
class ShefferSeq {
 public:
  ShefferSeq(Series<LambdaPoly> g, Series<LambdaPoly> f, LowerMatrix coeffs)
      : g_(std::move(g)), f_(std::move(f)), coeffs_(std::move(coeffs)) {}

  const Series<LambdaPoly>& g() const { return g_; }
  const Series<LambdaPoly>& f() const { return f_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const LowerMatrix& matrix() const { return coeffs_; }

  XPoly polynomial(std::size_t n) const {
    std::vector<LambdaPoly> c(coeffs_.at(n).begin(), coeffs_.at(n).end());
    return XPoly(std::move(c));
  }
  std::vector<XPoly> polynomials() const {
    std::vector<XPoly> out;
    for (std::size_t n = 0; n <= order(); ++n) out.push_back(polynomial(n));
    return out;
  }
  /// sum_n s_n(x) t^n / n!.
  Series<XPoly> egf() const { return Series<XPoly>::from_egf(order(), polynomials()); }

  /// True when g = 1, i.e. the sequence is associated to f.
  bool is_associated() const { return g_.truncated(order()) == Series<LambdaPoly>::one(order()); }

 private:
  Series<LambdaPoly> g_;
  Series<LambdaPoly> f_;
  LowerMatrix coeffs_;
};

namespace detail {

inline void require_invertible(const Series<LambdaPoly>& g, const char* who) {
  const auto c0 = ring<LambdaPoly>::as_scalar(g.coeff(0));
  if (!c0 || c0->is_zero()) {
    throw precondition_error(std::string(who) + ": g must be invertible (nonzero rational constant term), got " +
                             to_text(g.coeff(0)));
  }
}

inline void require_delta(const Series<LambdaPoly>& f, const char* who) {
  if (f.order() < 1) throw precondition_error(std::string(who) + ": f must be known to order >= 1");
  if (!f.coeff(0).is_zero()) {
    throw precondition_error(std::string(who) + ": f must be a delta series (zero constant term), got " +
                             to_text(f.coeff(0)));
  }
  const auto c1 = ring<LambdaPoly>::as_scalar(f.coeff(1));
  if (!c1 || c1->is_zero()) {
    throw precondition_error(std::string(who) + ": f must be a delta series (nonzero rational t-coefficient), got " +
                             to_text(f.coeff(1)));
  }
}

}  // namespace detail

/// Reads the coefficient matrix off the generating function
///   g(f̄(t))^{-1} e^{x f̄(t)} = sum_n s_n(x) t^n/n!,
/// expanding e^{x f̄} = sum_k x^k f̄^k / k!.
inline ShefferSeq sheffer_from_pair(const Series<LambdaPoly>& g, const Series<LambdaPoly>& f, std::size_t N) {
  detail::require_invertible(g, "sheffer_from_pair");
  detail::require_delta(f, "sheffer_from_pair");
  if (g.order() < N || f.order() < N) {
    throw precondition_error("sheffer_from_pair: g and f must be known to order " + std::to_string(N));
  }
  const auto gN = g.truncated(N);
  const auto fN = f.truncated(N);
  const auto fbar = comp_inverse(fN);
  const auto weight = mul_inverse(compose(gN, fbar));
  LowerMatrix rows(N + 1);
  for (std::size_t n = 0; n <= N; ++n) rows[n].resize(n + 1);
  Series<LambdaPoly> column = weight;  // weight * fbar^k / k!
  for (std::size_t k = 0; k <= N; ++k) {
    for (std::size_t n = k; n <= N; ++n) rows[n][k] = column.egf_coeff(n);
    column = column * fbar * Rational(1, static_cast<long>(k + 1));
  }
  return ShefferSeq(gN, fN, std::move(rows));
}

/// Associated sequence of f: the pair (1, f).
inline ShefferSeq associated_sequence(const Series<LambdaPoly>& f, std::size_t N) {
  return sheffer_from_pair(Series<LambdaPoly>::one(N), f, N);
}

/// x^n ~ (1, t), the identity of the umbral group.
inline ShefferSeq umbral_identity(std::size_t N) {
  return ShefferSeq(Series<LambdaPoly>::one(N), Series<LambdaPoly>::identity(N), identity_matrix(N));
}

/// q_n ∘ p_n (x) = sum_k q_{n,k} p_k(x): the matrix product q * p. With
/// p ~ (g, f) and q ~ (h, l), the result is attached to (g h(f), l(f)).
inline ShefferSeq umbral_compose(const ShefferSeq& q, const ShefferSeq& p) {
  if (q.order() != p.order()) {
    throw precondition_error("umbral_compose: orders differ (" + std::to_string(q.order()) + " vs " +
                             std::to_string(p.order()) + ")");
  }
  auto g = p.g() * compose(q.g(), p.f());
  auto f = compose(q.f(), p.f());
  return ShefferSeq(std::move(g), std::move(f), lower_product(q.matrix(), p.matrix()));
}

/// Pair predicted for q ∘ p without touching matrices.
inline std::pair<Series<LambdaPoly>, Series<LambdaPoly>> composed_pair(const ShefferSeq& q, const ShefferSeq& p) {
  return {p.g() * compose(q.g(), p.f()), compose(q.f(), p.f())};
}

/// r^{(m)}: the m-fold umbral composition of r with itself. For r ~ (h, l) the
/// pair is (prod_{i=0}^{m-1} h(l^i(t)), l^m(t)).
inline ShefferSeq umbral_power(const ShefferSeq& r, std::size_t m) {
  if (m == 0) throw precondition_error("umbral_power: m must be positive");
  ShefferSeq acc = r;
  for (std::size_t i = 1; i < m; ++i) acc = umbral_compose(r, acc);
  return acc;
}

/// The sequence inverse to s ~ (g, f) under umbral composition: (g(f̄)^{-1}, f̄).
inline ShefferSeq umbral_inverse(const ShefferSeq& s) {
  const auto fbar = comp_inverse(s.f());
  return sheffer_from_pair(mul_inverse(compose(s.g(), fbar)), fbar, s.order());
}

/// r_n(x) = sum_k S_{2,λ}(n,k) x^k ~ (1, log_λ(1+t)).
inline ShefferSeq stirling2_sequence(std::size_t N) { return associated_sequence(deg_log(N), N); }
/// r_n(x) = sum_k S_{1,λ}(n,k) x^k ~ (1, e_λ(t) - 1).
inline ShefferSeq stirling1_sequence(std::size_t N) { return associated_sequence(deg_exp_minus_one(N), N); }
/// s_n(x) = (x)_{n,λ} ~ (1, (e^{λt} - 1)/λ).
inline ShefferSeq deg_falling_sequence(std::size_t N) { return associated_sequence(lambda_scaled_expm1(N), N); }

/// Outcome of a generating-function comparison.
struct SubstitutionReport {
  bool holds = true;
  std::optional<std::size_t> first_mismatch;  // t-power of the first differing coefficient
  std::string detail;
};

inline SubstitutionReport compare_egf(const Series<XPoly>& lhs, const Series<XPoly>& rhs) {
  SubstitutionReport rep;
  const std::size_t N = std::min(lhs.order(), rhs.order());
  for (std::size_t n = 0; n <= N; ++n) {
    if (lhs.egf_coeff(n) != rhs.egf_coeff(n)) {
      rep.holds = false;
      rep.first_mismatch = n;
      rep.detail = "n=" + std::to_string(n) + ": " + to_text(lhs.egf_coeff(n)) + " vs " + to_text(rhs.egf_coeff(n));
      return rep;
    }
  }
  return rep;
}

/// For an associated r ~ (1, l): checks that the EGF of r^{(m)} ∘ s equals the
/// EGF of s with t replaced by l̄^m(t), to order N.
inline SubstitutionReport substitution_check(const ShefferSeq& r, const ShefferSeq& s, std::size_t m, std::size_t N) {
  if (!r.is_associated()) throw precondition_error("substitution_check: r must be an associated sequence (g = 1)");
  if (r.order() < N || s.order() < N) throw precondition_error("substitution_check: sequences shorter than N");
  const auto composed = umbral_compose(umbral_power(r, m), s);
  const auto lbar_m = compositional_power(comp_inverse(r.f().truncated(N)), m);
  const auto substituted = compose(s.egf().truncated(N), lift(lbar_m));
  return compare_egf(composed.egf().truncated(N), substituted);
}

/// J_{n,λ}(x) = r^{(2)} ∘ s with r the S_{2,λ} sequence and s = (x)_{n,λ}.
inline PolyFamily jindalrae_via_umbral(std::size_t N) {
  const auto polys = umbral_compose(umbral_power(stirling2_sequence(N), 2), deg_falling_sequence(N)).polynomials();
  require_agreement("jindalrae umbral", polys, jindalrae(N).polys());
  return PolyFamily(FamilyKind::Jindalrae, polys);
}

/// G_{n,λ}(x) = r^{(2)} ∘ s with r the S_{1,λ} sequence and s = (x)_{n,λ}.
inline PolyFamily gaenari_via_umbral(std::size_t N) {
  const auto polys = umbral_compose(umbral_power(stirling1_sequence(N), 2), deg_falling_sequence(N)).polynomials();
  require_agreement("gaenari umbral", polys, gaenari(N).polys());
  return PolyFamily(FamilyKind::Gaenari, polys);
}

}  // namespace degen
