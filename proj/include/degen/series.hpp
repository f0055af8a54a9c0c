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

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/poly.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Power series in t truncated modulo t^(order+1), stored as raw coefficients
/// c_0..c_order of t^n. Exponential generating function
/// coefficients are read through `egf_coeff(n) = n! * c_n`.
///
/// Binary operations accept operands of different orders; the result carries
/// the smaller one.
template <class R>
class Series {
 public:
  using ring_type = R;

  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  Series(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1) {
      throw precondition_error("Series: " + std::to_string(coeffs_.size()) + " coefficients exceed order " +
                               std::to_string(order));
    }
    coeffs_.resize(order + 1);
  }

  static Series constant(std::size_t order, R value) {
    Series s(order);
    s.coeffs_[0] = std::move(value);
    return s;
  }
  static Series one(std::size_t order) { return constant(order, ring<R>::one()); }
  /// The series t.
  static Series identity(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = ring<R>::one();
    return s;
  }
  /// Builds a series from EGF coefficients a_n (stores a_n / n!).
  static Series from_egf(std::size_t order, const std::vector<R>& egf) {
    Series s(order);
    for (std::size_t n = 0; n <= order && n < egf.size(); ++n) s.coeffs_[n] = egf[n] * factorial(n).inverse();
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  const R& coeff(std::size_t n) const {
    if (n > order()) {
      throw std::out_of_range("Series: coefficient " + std::to_string(n) + " beyond order " + std::to_string(order()));
    }
    return coeffs_[n];
  }
  R egf_coeff(std::size_t n) const { return coeff(n) * factorial(n); }

  Series truncated(std::size_t order) const {
    Series s(std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return out;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    const std::size_t N = out.order();
    for (std::size_t i = 0; i <= N; ++i) {
      if (ring<R>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= N; ++j) {
        if (ring<R>::is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }
  friend Series operator*(Series a, const Rational& r) {
    for (auto& c : a.coeffs_) c = c * r;
    return a;
  }
  friend Series operator*(Series a, const R& r) requires(!std::same_as<R, Rational>) {
    for (auto& c : a.coeffs_) c = c * r;
    return a;
  }

  /// Equal coefficients over the common order.
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<R> coeffs_;
};

/// Embeds a series over λ-polynomials into the x-polynomial ring.
inline Series<XPoly> lift(const Series<LambdaPoly>& s) {
  std::vector<XPoly> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coefficients()) out.push_back(lift(c));
  return Series<XPoly>(s.order(), std::move(out));
}

/// Fixes λ in every coefficient (coefficients stay in the same ring).
inline Series<LambdaPoly> specialize(const Series<LambdaPoly>& s, const Rational& lambda) {
  std::vector<LambdaPoly> out;
  for (const auto& c : s.coefficients()) out.emplace_back(specialize(c, lambda));
  return Series<LambdaPoly>(s.order(), std::move(out));
}

template <class R>
Series<R> power(const Series<R>& f, std::size_t k) {
  Series<R> result = Series<R>::one(f.order());
  Series<R> base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

/// f^k / k!.
template <class R>
Series<R> scaled_power(const Series<R>& f, std::size_t k) {
  return power(f, k) * factorial(k).inverse();
}

/// outer(inner(t)) by Horner's scheme. inner must have zero constant term.
template <class R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
  if (!ring<R>::is_zero(inner.coeff(0))) {
    throw precondition_error("compose: inner series has nonzero constant term (coefficient of t^0 is " +
                             to_text(inner.coeff(0)) + ")");
  }
  const std::size_t N = std::min(outer.order(), inner.order());
  const Series<R> in = inner.truncated(N);
  Series<R> acc = Series<R>::constant(N, outer.coeff(N));
  for (std::size_t n = N; n-- > 0;) {
    acc = acc * in;
    Series<R> c = Series<R>::constant(N, outer.coeff(n));
    acc = acc + c;
  }
  return acc;
}

/// m-fold compositional power f∘f∘...∘f (left-associated); m = 0 gives t.
template <class R>
Series<R> compositional_power(const Series<R>& f, std::size_t m) {
  Series<R> acc = Series<R>::identity(f.order());
  for (std::size_t i = 0; i < m; ++i) acc = compose(f, acc);
  return acc;
}

/// Multiplicative inverse; the constant term must be a nonzero rational.
template <class R>
Series<R> mul_inverse(const Series<R>& f) {
  const auto c0 = ring<R>::as_scalar(f.coeff(0));
  if (!c0 || c0->is_zero()) {
    throw precondition_error("mul_inverse: constant term must be a nonzero rational constant");
  }
  const Rational inv0 = c0->inverse();
  std::vector<R> g(f.order() + 1);
  g[0] = ring<R>::from_scalar(inv0);
  for (std::size_t n = 1; n <= f.order(); ++n) {
    R acc{};
    for (std::size_t k = 1; k <= n; ++k) acc += f.coeff(k) * g[n - k];
    g[n] = -(acc * inv0);
  }
  return Series<R>(f.order(), std::move(g));
}

/// Compositional inverse f̄ with f(f̄(t)) = f̄(f(t)) = t, found one order at a
/// time: the t^n coefficient of f(f̄) is f_1 * f̄_n plus terms in lower f̄_j.
template <class R>
Series<R> comp_inverse(const Series<R>& f) {
  if (!ring<R>::is_zero(f.coeff(0))) {
    throw precondition_error("comp_inverse: constant term must be zero");
  }
  if (f.order() < 1) return Series<R>::identity(f.order());
  const auto a1 = ring<R>::as_scalar(f.coeff(1));
  if (!a1 || a1->is_zero()) {
    throw precondition_error("comp_inverse: coefficient of t must be a nonzero rational constant");
  }
  const Rational inv1 = a1->inverse();
  const std::size_t N = f.order();
  std::vector<R> g(N + 1);
  g[1] = ring<R>::from_scalar(inv1);
  for (std::size_t n = 2; n <= N; ++n) {
    const Series<R> partial(n, std::vector<R>(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n) + 1));
    const Series<R> residual = compose(f.truncated(n), partial);
    g[n] = -(residual.coeff(n) * inv1);
  }
  return Series<R>(N, std::move(g));
}

/// f(t)/t for f with zero constant term.
template <class R>
Series<R> shift_down(const Series<R>& f) {
  if (!ring<R>::is_zero(f.coeff(0))) throw precondition_error("shift_down: constant term must be zero");
  if (f.order() == 0) throw precondition_error("shift_down: order must be at least 1");
  return Series<R>(f.order() - 1, std::vector<R>(f.coefficients().begin() + 1, f.coefficients().end()));
}

/// e_λ^a(t) = sum (a)_{n,λ} t^n/n! for a ring element a (x, 1, an integer, ...).
template <class R>
Series<R> deg_exp(const R& exponent, std::size_t order) {
  std::vector<R> coeffs(order + 1);
  R ff = ring<R>::one();
  const R lam = lambda_symbol<R>();
  for (std::size_t n = 0; n <= order; ++n) {
    coeffs[n] = ff * factorial(n).inverse();
    ff *= exponent - lam * Rational(static_cast<long>(n));
  }
  return Series<R>(order, std::move(coeffs));
}

/// e_λ(t) over λ-polynomials.
inline Series<LambdaPoly> deg_exp(std::size_t order) { return deg_exp(ring<LambdaPoly>::one(), order); }

/// e_λ^x(t) over x-polynomials.
inline Series<XPoly> deg_exp_x(std::size_t order) { return deg_exp(x_symbol(), order); }

/// log_λ(1+t) = sum (λ-1)(λ-2)...(λ-n+1) t^n/n!; no division by λ occurs.
inline Series<LambdaPoly> deg_log(std::size_t order) {
  std::vector<LambdaPoly> coeffs(order + 1);
  for (std::size_t n = 1; n <= order; ++n) coeffs[n] = lambda_shifted_falling(n) * factorial(n).inverse();
  return Series<LambdaPoly>(order, std::move(coeffs));
}

/// e_λ(t) - 1.
inline Series<LambdaPoly> deg_exp_minus_one(std::size_t order) {
  return deg_exp(order) - Series<LambdaPoly>::one(order);
}

/// e_λ(e_λ(t) - 1) - 1.
inline Series<LambdaPoly> iterated_deg_exp(std::size_t order) {
  const auto e = deg_exp_minus_one(order);
  return compose(e, e);
}

/// log_λ(log_λ(1+t) + 1), built directly by composing log_λ(1+t) with itself.
inline Series<LambdaPoly> iterated_deg_log(std::size_t order) {
  const auto l = deg_log(order);
  return compose(l, l);
}

/// Classical e^t - 1 (λ-free).
inline Series<LambdaPoly> exp_minus_one(std::size_t order) {
  std::vector<LambdaPoly> coeffs(order + 1);
  for (std::size_t n = 1; n <= order; ++n) coeffs[n] = LambdaPoly(factorial(n).inverse());
  return Series<LambdaPoly>(order, std::move(coeffs));
}

/// (e^{λt} - 1)/λ = sum λ^{n-1} t^n/n!.
inline Series<LambdaPoly> lambda_scaled_expm1(std::size_t order) {
  std::vector<LambdaPoly> coeffs(order + 1);
  for (std::size_t n = 1; n <= order; ++n) coeffs[n] = LambdaPoly::monomial(factorial(n).inverse(), n - 1);
  return Series<LambdaPoly>(order, std::move(coeffs));
}

/// (1 + f(t))^x = sum_l (x)_l f^l / l! for a delta series f.
inline Series<XPoly> binomial_power_x(const Series<LambdaPoly>& f) {
  if (!f.coeff(0).is_zero()) throw precondition_error("binomial_power_x: f must have zero constant term");
  const std::size_t N = f.order();
  Series<XPoly> out(N);
  Series<LambdaPoly> fl = Series<LambdaPoly>::one(N);
  for (std::size_t l = 0; l <= N; ++l) {
    out = out + lift(fl * factorial(l).inverse()) * falling_factorial(l);
    fl = fl * f;
  }
  return out;
}

}  // namespace degen
