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

// Document builders behind the command-line tool. Input problems surface as
// precondition_error; the tool maps those to its usage exit code.

#include <cstddef>
#include <optional>
#include <regex>
#include <string>

#include "degen/errors.hpp"
#include "degen/families.hpp"
#include "degen/render.hpp"
#include "degen/triangles.hpp"

namespace degen {

inline constexpr std::size_t kMaxCliOrder = 24;

namespace detail {

inline void require_cli_order(std::size_t order) {
  if (order > kMaxCliOrder) {
    throw precondition_error("order " + std::to_string(order) + " exceeds the limit of " + std::to_string(kMaxCliOrder));
  }
}

inline json lambda_param(const std::optional<Rational>& lambda) {
  return lambda ? json(lambda->to_string()) : json("symbolic");
}

inline Cell poly_cell(const XPoly& p, const std::optional<Rational>& lambda, const std::optional<Rational>& x) {
  if (lambda && x) return specialize(p, *lambda, *x);
  if (lambda) return rational_coefficients(specialize(p, *lambda));
  if (x) return evaluate_at_x(p, LambdaPoly(*x));
  return p;
}

inline Cell number_cell(const LambdaPoly& v, const std::optional<Rational>& lambda) {
  if (lambda) return specialize(v, *lambda);
  return v;
}

/// Classical triangles carry no λ, so their entries render as plain rationals.
inline bool lambda_free(TriangleKind kind) {
  return kind == TriangleKind::S1Classical || kind == TriangleKind::S2Classical || kind == TriangleKind::TCompose;
}

inline Cell triangle_cell(TriangleKind kind, const LambdaPoly& v, const std::optional<Rational>& lambda) {
  if (lambda_free(kind)) return specialize(v, Rational(0));
  return number_cell(v, lambda);
}

}  // namespace detail

inline std::string triangle_kind_list() { return "s1, s2, s1deg, s2deg, j1deg, j2deg, t, korobov, degbernoulli"; }
inline std::string family_kind_list() { return "degbell, newbell, jindalrae, gaenari"; }

/// All entries of a triangle, or of a Korobov / degenerate Bernoulli slice of order r.
inline Document triangle_document(const std::string& kind, std::size_t order, std::optional<std::size_t> r,
                                  const std::optional<Rational>& lambda) {
  detail::require_cli_order(order);
  Document doc{kind, order, {}, json::object()};
  doc.parameters["lambda"] = detail::lambda_param(lambda);
  if (const auto slice_kind = parse_slice_kind(kind)) {
    const std::size_t rr = r.value_or(1);
    if (rr == 0 || rr > kMaxCliOrder) throw precondition_error(kind + ": r must be in [1, 24]");
    doc.parameters["r"] = rr;
    const auto slice = make_slice(*slice_kind, order, rr);
    for (std::size_t n = 0; n <= order; ++n) doc.entries.push_back({n, std::nullopt, detail::number_cell(slice.at(n), lambda)});
    return doc;
  }
  const auto tk = parse_triangle_kind(kind);
  if (!tk) throw precondition_error("unknown triangle kind '" + kind + "' (expected one of " + triangle_kind_list() + ")");
  if (r) throw precondition_error("--r applies only to korobov and degbernoulli");
  const auto tri = make_triangle(*tk, order);
  for (std::size_t n = 0; n <= order; ++n)
    for (std::size_t k = 0; k <= n; ++k) doc.entries.push_back({n, k, detail::triangle_cell(*tk, tri.at(n, k), lambda)});
  return doc;
}

/// P_0..P_order of a polynomial family, optionally specialized at λ and/or x.
inline Document poly_document(const std::string& family, std::size_t order, const std::optional<Rational>& lambda,
                              const std::optional<Rational>& x) {
  detail::require_cli_order(order);
  const auto fk = parse_family_kind(family);
  if (!fk) throw precondition_error("unknown family '" + family + "' (expected one of " + family_kind_list() + ")");
  Document doc{family, order, {}, json::object()};
  doc.parameters["lambda"] = detail::lambda_param(lambda);
  doc.parameters["x"] = x ? json(x->to_string()) : json("symbolic");
  const auto fam = make_family(*fk, order);
  for (std::size_t n = 0; n <= order; ++n) doc.entries.push_back({n, std::nullopt, detail::poly_cell(fam.at(n), lambda, x)});
  return doc;
}

/// Evaluates "name(n)" for a family, "name(n,k)" for a triangle, or
/// "korobov(n,r)" / "degbernoulli(n,r)" for K_{n,(r)} and β_{n,(r)}.
inline Cell eval_expression(const std::string& expr, const std::optional<Rational>& lambda,
                            const std::optional<Rational>& x) {
  static const std::regex pattern(R"(^\s*([a-z0-9]+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$)");
  std::smatch m;
  if (!std::regex_match(expr, m, pattern)) {
    throw precondition_error("malformed expression '" + expr + "' (expected name(n) or name(n,k))");
  }
  const std::string fn = m[1];
  if (m[2].length() > 6 || m[3].length() > 6) throw precondition_error("index too large in '" + expr + "'");
  const std::size_t n = std::stoul(m[2]);
  const bool has_second = m[3].matched;
  const std::size_t second = has_second ? std::stoul(m[3]) : 0;
  detail::require_cli_order(n);

  if (const auto fk = parse_family_kind(fn)) {
    if (has_second) throw precondition_error(fn + " takes one index");
    return detail::poly_cell(make_family(*fk, n).at(n), lambda, x);
  }
  if (x) throw precondition_error("--x applies only to polynomial families");
  if (const auto sk = parse_slice_kind(fn)) {
    if (!has_second) throw precondition_error(fn + " takes (n, r)");
    if (second == 0 || second > kMaxCliOrder) throw precondition_error(fn + ": r must be in [1, 24]");
    return detail::number_cell(make_slice(*sk, n, second).at(n), lambda);
  }
  if (const auto tk = parse_triangle_kind(fn)) {
    if (!has_second) throw precondition_error(fn + " takes (n, k)");
    return detail::triangle_cell(*tk, make_triangle(*tk, n).at(n, second), lambda);
  }
  throw precondition_error("unknown name '" + fn + "' in expression");
}

}  // namespace degen
