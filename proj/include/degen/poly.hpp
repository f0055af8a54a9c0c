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
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/rational.hpp"

namespace degen {

template <class C>
class Poly;

/// Ring-level helpers shared by every coefficient type in the λ/x tower.
template <class R>
struct ring;

template <>
struct ring<Rational> {
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
  static std::optional<Rational> as_scalar(const Rational& r) { return r; }
  static Rational from_scalar(const Rational& r) { return r; }
};

template <class C>
struct ring<Poly<C>> {
  static Poly<C> one() { return Poly<C>(ring<C>::one()); }
  static bool is_zero(const Poly<C>& p) { return p.is_zero(); }
  /// The value as a Rational when p is a constant (free of every indeterminate).
  static std::optional<Rational> as_scalar(const Poly<C>& p) {
    if (p.degree() > 0) return std::nullopt;
    return ring<C>::as_scalar(p[0]);
  }
  static Poly<C> from_scalar(const Rational& r) { return Poly<C>(ring<C>::from_scalar(r)); }
};

/// Dense univariate polynomial, canonical (no trailing zero coefficients).
/// The zero polynomial has no coefficients and degree -1.
template <class C>
class Poly {
 public:
  using coefficient_type = C;

  Poly() = default;
  explicit Poly(C constant) : coeffs_{std::move(constant)} { trim(); }
  explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

  /// c * var^power.
  static Poly monomial(C c, std::size_t power) {
    std::vector<C> v(power + 1);
    v[power] = std::move(c);
    return Poly(std::move(v));
  }
  /// The indeterminate itself.
  static Poly variable() { return monomial(ring<C>::one(), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  /// Coefficient of var^i; zero beyond the degree.
  const C& operator[](std::size_t i) const {
    static const C zero{};
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const C& leading() const { return (*this)[coeffs_.empty() ? 0 : coeffs_.size() - 1]; }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (ring<C>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (ring<C>::is_zero(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }
  /// Coefficientwise product with an element of the coefficient ring.
  friend Poly operator*(Poly a, const C& c) {
    for (auto& x : a.coeffs_) x = x * c;
    a.trim();
    return a;
  }
  /// Scalar product with a Rational for rings above the ground field.
  friend Poly operator*(Poly a, const Rational& r) requires(!std::same_as<C, Rational>) {
    for (auto& x : a.coeffs_) x = x * r;
    a.trim();
    return a;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && ring<C>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

/// Polynomial in λ over the rationals.
using LambdaPoly = Poly<Rational>;
/// Polynomial in x whose coefficients are λ-polynomials.
using XPoly = Poly<LambdaPoly>;

/// λ as an element of the given ring.
template <class R>
R lambda_symbol();
template <>
inline LambdaPoly lambda_symbol<LambdaPoly>() { return LambdaPoly::variable(); }
template <>
inline XPoly lambda_symbol<XPoly>() { return XPoly(LambdaPoly::variable()); }

/// x as an XPoly.
inline XPoly x_symbol() { return XPoly::variable(); }

/// Embeds a λ-polynomial as a constant (x-free) XPoly.
inline XPoly lift(const LambdaPoly& p) { return XPoly(p); }

/// (x)_n = x(x-1)...(x-n+1).
inline XPoly falling_factorial(std::size_t n) {
  XPoly out = ring<XPoly>::one();
  for (std::size_t j = 0; j < n; ++j) {
    out *= XPoly{LambdaPoly(Rational(-static_cast<long>(j))), ring<LambdaPoly>::one()};
  }
  return out;
}

/// (x)_{n,λ} = x(x-λ)(x-2λ)...(x-(n-1)λ).
inline XPoly deg_falling_factorial(std::size_t n) {
  XPoly out = ring<XPoly>::one();
  for (std::size_t j = 0; j < n; ++j) {
    out *= XPoly{LambdaPoly{Rational(0), Rational(-static_cast<long>(j))}, ring<LambdaPoly>::one()};
  }
  return out;
}

/// (a)_{n,λ} for an arbitrary ring element a: a(a-λ)...(a-(n-1)λ).
template <class R>
R deg_falling_factorial_of(const R& a, std::size_t n) {
  R out = ring<R>::one();
  const R lam = lambda_symbol<R>();
  for (std::size_t j = 0; j < n; ++j) out *= a - lam * Rational(static_cast<long>(j));
  return out;
}

/// (λ-1)(λ-2)...(λ-m+1), which equals (m-1)! * binom(λ-1, m-1). Returns 1 for m = 1.
inline LambdaPoly lambda_shifted_falling(std::size_t m) {
  if (m == 0) throw precondition_error("lambda_shifted_falling: m must be positive");
  LambdaPoly out = ring<LambdaPoly>::one();
  for (std::size_t j = 1; j < m; ++j) out *= LambdaPoly{Rational(-static_cast<long>(j)), Rational(1)};
  return out;
}

// Horner evaluation and specialization -------------------------------------

/// p(λ) for a rational λ.
inline Rational specialize(const LambdaPoly& p, const Rational& lambda) {
  Rational acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * lambda + p[i];
  return acc;
}

/// Fixes λ, keeps x symbolic. The result has λ-free coefficients.
inline XPoly specialize(const XPoly& p, const Rational& lambda) {
  std::vector<LambdaPoly> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.emplace_back(specialize(c, lambda));
  return XPoly(std::move(out));
}

/// Full scalar value at (λ, x).
inline Rational specialize(const XPoly& p, const Rational& lambda, const Rational& x) {
  Rational acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + specialize(p[i], lambda);
  return acc;
}

/// Substitutes x := value, leaving λ symbolic.
inline LambdaPoly evaluate_at_x(const XPoly& p, const LambdaPoly& value) {
  LambdaPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * value + p[i];
  return acc;
}

/// Coefficients of p in a monic triangular basis: p = sum_k c_k * basis[k].
/// basis[k] must have x-degree k with leading coefficient 1.
inline std::vector<LambdaPoly> expand_in_basis(XPoly p, const std::vector<XPoly>& basis) {
  if (p.degree() >= static_cast<int>(basis.size())) {
    throw precondition_error("expand_in_basis: basis too short for polynomial of degree " +
                             std::to_string(p.degree()));
  }
  std::vector<LambdaPoly> out(static_cast<std::size_t>(std::max(p.degree() + 1, 0)));
  for (int k = p.degree(); k >= 0; --k) {
    const auto& b = basis[static_cast<std::size_t>(k)];
    if (b.degree() != k || b.leading() != ring<LambdaPoly>::one()) {
      throw precondition_error("expand_in_basis: basis element " + std::to_string(k) + " is not monic of degree " +
                               std::to_string(k));
    }
    LambdaPoly c = p[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    p -= b * c;
    out[static_cast<std::size_t>(k)] = std::move(c);
  }
  return out;
}

// Text rendering ------------------------------------------------------------

namespace detail {

inline std::string power_suffix(const std::string& var, std::size_t power) {
  if (power == 0) return "";
  if (power == 1) return var;
  return var + "^" + std::to_string(power);
}

}  // namespace detail

/// Human-readable form ascending in λ, e.g. "1 - 2λ + λ^2".
inline std::string to_text(const LambdaPoly& p, const std::string& var = "λ") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p[i];
    if (c.is_zero()) continue;
    const bool negative = c < Rational(0);
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (i == 0) {
      out += mag.to_string();
    } else if (unit) {
      out += detail::power_suffix(var, i);
    } else if (mag.is_integer()) {
      out += mag.to_string() + detail::power_suffix(var, i);
    } else {
      out += "(" + mag.to_string() + ")" + detail::power_suffix(var, i);
    }
  }
  return out;
}

/// Human-readable form descending in x, e.g. "x^2 + (1 - 2λ)x".
inline std::string to_text(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const LambdaPoly& c = p[i];
    if (c.is_zero()) continue;
    std::size_t terms = 0;
    for (const auto& r : c.coefficients()) terms += r.is_zero() ? 0 : 1;
    std::string body = to_text(c);
    bool negative = false;
    if (terms == 1 && body.front() == '-') {
      negative = true;
      body.erase(0, 1);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool fraction = c.degree() == 0 && !c[0].is_integer();
    if (terms > 1 || (i > 0 && fraction)) {
      out += "(" + body + ")" + detail::power_suffix("x", i);
    } else if (i > 0 && body == "1") {
      out += detail::power_suffix("x", i);
    } else {
      out += body + detail::power_suffix("x", i);
    }
  }
  return out;
}

inline std::string to_text(const Rational& r) { return r.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << to_text(p); }

}  // namespace degen
