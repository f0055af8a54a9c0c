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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/poly.hpp"
#include "degen/series.hpp"
#include "degen/triangles.hpp"

namespace degen {

enum class FamilyKind { DegBell, NewTypeBell, Jindalrae, Gaenari };

inline std::string_view name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::DegBell: return "degbell";
    case FamilyKind::NewTypeBell: return "newbell";
    case FamilyKind::Jindalrae: return "jindalrae";
    case FamilyKind::Gaenari: return "gaenari";
  }
  return "?";
}

inline std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (auto k : {FamilyKind::DegBell, FamilyKind::NewTypeBell, FamilyKind::Jindalrae, FamilyKind::Gaenari}) {
    if (name(k) == text) return k;
  }
  return std::nullopt;
}

/// P_0..P_order of one polynomial family.
class PolyFamily {
 public:
  PolyFamily(FamilyKind kind, std::vector<XPoly> polys) : kind_(kind), polys_(std::move(polys)) {
    if (polys_.empty()) throw precondition_error("PolyFamily: needs at least P_0");
  }

  FamilyKind kind() const { return kind_; }
  std::size_t order() const { return polys_.size() - 1; }
  const std::vector<XPoly>& polys() const { return polys_; }
  const XPoly& at(std::size_t n) const {
    if (n > order()) {
      throw std::out_of_range(std::string(name(kind_)) + ": index " + std::to_string(n) + " beyond stored order " +
                              std::to_string(order()));
    }
    return polys_[n];
  }
  /// Numbers P_n(1), λ symbolic.
  LambdaPoly number(std::size_t n) const { return evaluate_at_x(at(n), ring<LambdaPoly>::one()); }

  friend bool operator==(const PolyFamily& a, const PolyFamily& b) { return a.kind_ == b.kind_ && a.polys_ == b.polys_; }

 private:
  FamilyKind kind_;
  std::vector<XPoly> polys_;
};

inline std::vector<XPoly> egf_polys(const Series<XPoly>& s) {
  std::vector<XPoly> out;
  for (std::size_t n = 0; n <= s.order(); ++n) out.push_back(s.egf_coeff(n));
  return out;
}

/// P_n = sum_k table(n,k) * (x)_{k,λ}.
inline std::vector<XPoly> deg_falling_sum(const LowerMatrix& table) {
  std::vector<XPoly> ff;
  for (std::size_t k = 0; k < table.size(); ++k) ff.push_back(deg_falling_factorial(k));
  std::vector<XPoly> out;
  for (std::size_t n = 0; n < table.size(); ++n) {
    XPoly p;
    for (std::size_t k = 0; k <= n; ++k) {
      if (!table[n][k].is_zero()) p += ff[k] * table[n][k];
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline void require_agreement(std::string_view what, const std::vector<XPoly>& a, const std::vector<XPoly>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t n = 0; n < len; ++n) {
    const XPoly lhs = n < a.size() ? a[n] : XPoly{};
    const XPoly rhs = n < b.size() ? b[n] : XPoly{};
    if (lhs != rhs) {
      throw route_mismatch(std::string(what) + ": routes disagree at n=" + std::to_string(n) + ": " + to_text(lhs) +
                           " vs " + to_text(rhs));
    }
  }
}

/// e_λ^x(inner(t)) as a series over x-polynomials.
inline Series<XPoly> deg_exp_x_of(const Series<LambdaPoly>& inner) {
  return compose(deg_exp_x(inner.order()), lift(inner));
}

namespace routes {

inline std::vector<XPoly> deg_bell_sum(std::size_t N) { return deg_falling_sum(stirling2_deg(N).rows()); }
inline std::vector<XPoly> deg_bell_series(std::size_t N) { return egf_polys(deg_exp_x_of(deg_exp_minus_one(N))); }
inline std::vector<XPoly> newtype_bell_sum(std::size_t N) { return deg_falling_sum(classical_triangles(N).second.rows()); }
inline std::vector<XPoly> newtype_bell_series(std::size_t N) { return egf_polys(deg_exp_x_of(exp_minus_one(N))); }
inline std::vector<XPoly> jindalrae_sum(std::size_t N) { return deg_falling_sum(jstirling2(N).rows()); }
inline std::vector<XPoly> jindalrae_series(std::size_t N) { return egf_polys(deg_exp_x_of(iterated_deg_exp(N))); }
inline std::vector<XPoly> gaenari_sum(std::size_t N) { return deg_falling_sum(jstirling1(N).rows()); }
inline std::vector<XPoly> gaenari_series(std::size_t N) { return egf_polys(deg_exp_x_of(iterated_deg_log(N))); }

}  // namespace routes

/// Degenerate Bell polynomials B_{n,λ}(x).
inline PolyFamily deg_bell(std::size_t N) {
  auto a = routes::deg_bell_sum(N);
  require_agreement("deg_bell", a, routes::deg_bell_series(N));
  return PolyFamily(FamilyKind::DegBell, std::move(a));
}

/// New-type degenerate Bell polynomials Bel_{n,λ}(x) (classical S_2 weights).
inline PolyFamily newtype_bell(std::size_t N) {
  auto a = routes::newtype_bell_sum(N);
  require_agreement("newtype_bell", a, routes::newtype_bell_series(N));
  return PolyFamily(FamilyKind::NewTypeBell, std::move(a));
}

/// Jindalrae polynomials J_{n,λ}(x).
inline PolyFamily jindalrae(std::size_t N) {
  auto a = routes::jindalrae_sum(N);
  require_agreement("jindalrae", a, routes::jindalrae_series(N));
  return PolyFamily(FamilyKind::Jindalrae, std::move(a));
}

/// Gaenari polynomials G_{n,λ}(x).
inline PolyFamily gaenari(std::size_t N) {
  auto a = routes::gaenari_sum(N);
  require_agreement("gaenari", a, routes::gaenari_series(N));
  return PolyFamily(FamilyKind::Gaenari, std::move(a));
}

inline PolyFamily make_family(FamilyKind kind, std::size_t N) {
  switch (kind) {
    case FamilyKind::DegBell: return deg_bell(N);
    case FamilyKind::NewTypeBell: return newtype_bell(N);
    case FamilyKind::Jindalrae: return jindalrae(N);
    case FamilyKind::Gaenari: return gaenari(N);
  }
  throw precondition_error("unknown family");
}

/// Bell numbers by set-partition enumeration.
inline std::int64_t bell_number_classical(int n) { return oracle::bell_number_classical(n); }

}  // namespace degen
