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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "degen/errors.hpp"
#include "degen/families.hpp"
#include "degen/oracles.hpp"
#include "degen/poly.hpp"
#include "degen/series.hpp"
#include "degen/triangles.hpp"
#include "degen/umbral.hpp"

namespace degen {

/// One side of an identity instance.
using Value = std::variant<Rational, LambdaPoly, XPoly>;

inline std::string to_text(const Value& v) {
  return std::visit([](const auto& x) { return degen::to_text(x); }, v);
}

/// Fixes λ; x stays symbolic.
inline Value specialize(const Value& v, const Rational& lambda) {
  if (const auto* p = std::get_if<LambdaPoly>(&v)) return Value{specialize(*p, lambda)};
  if (const auto* p = std::get_if<XPoly>(&v)) return Value{specialize(*p, lambda)};
  return v;
}

inline bool values_equal(const Value& a, const Value& b) {
  // Compare across alternatives by lifting into XPoly.
  const auto as_x = [](const Value& v) -> XPoly {
    if (const auto* r = std::get_if<Rational>(&v)) return XPoly(LambdaPoly(*r));
    if (const auto* p = std::get_if<LambdaPoly>(&v)) return XPoly(*p);
    return std::get<XPoly>(v);
  };
  return as_x(a) == as_x(b);
}

/// A single instance "lhs = rhs" at a labelled index such as "n=3,k=2".
struct Comparison {
  std::string where;
  Value lhs;
  Value rhs;
};

enum class CheckStatus { Pass, Fail };

struct CheckResult {
  std::string identity_id;
  std::size_t order = 0;
  std::string lambda = "symbolic";  // or the rational λ substituted before comparing
  CheckStatus status = CheckStatus::Pass;
  std::optional<std::string> witness;  // always present on failure
};

struct SuiteConfig {
  std::size_t order = 12;
  std::vector<Rational> lambda_specializations;
  std::optional<std::vector<std::string>> identity_filter;
  bool include_optional = false;
};

/// Everything an identity needs at one order, computed on first use.
class Workbench {
 public:
  explicit Workbench(std::size_t order) : order_(order) {}

  std::size_t order() const { return order_; }

  const Triangle& s1() { return get(s1_, [&] { return stirling1_deg(order_); }); }
  const Triangle& s2() { return get(s2_, [&] { return stirling2_deg(order_); }); }
  const Triangle& j1() { return get(j1_, [&] { return jstirling1(order_); }); }
  const Triangle& j2() { return get(j2_, [&] { return jstirling2(order_); }); }
  const Triangle& s1_classical() { return classical().first; }
  const Triangle& s2_classical() { return classical().second; }
  const Triangle& t() { return get(t_, [&] { return t_numbers(order_); }); }
  const PolyFamily& bell() { return get(bell_, [&] { return deg_bell(order_); }); }
  const PolyFamily& newbell() { return get(newbell_, [&] { return newtype_bell(order_); }); }
  const PolyFamily& jind() { return get(jind_, [&] { return jindalrae(order_); }); }
  const PolyFamily& gaen() { return get(gaen_, [&] { return gaenari(order_); }); }
  const std::vector<XPoly>& deg_falling() {
    return get(deg_falling_, [&] {
      std::vector<XPoly> v;
      for (std::size_t n = 0; n <= order_; ++n) v.push_back(deg_falling_factorial(n));
      return v;
    });
  }
  const NumberSlice& korobov_slice(std::size_t r) {
    auto it = korobov_.find(r);
    if (it == korobov_.end()) it = korobov_.emplace(r, korobov(order_, r)).first;
    return it->second;
  }
  const NumberSlice& bernoulli_slice(std::size_t r) {
    auto it = bernoulli_.find(r);
    if (it == bernoulli_.end()) it = bernoulli_.emplace(r, deg_bernoulli(order_, r)).first;
    return it->second;
  }

 private:
  template <class T, class F>
  static const T& get(std::optional<T>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }
  const std::pair<Triangle, Triangle>& classical() { return get(classical_, [&] { return classical_triangles(order_); }); }

  std::size_t order_;
  std::optional<Triangle> s1_, s2_, j1_, j2_, t_;
  std::optional<std::pair<Triangle, Triangle>> classical_;
  std::optional<PolyFamily> bell_, newbell_, jind_, gaen_;
  std::optional<std::vector<XPoly>> deg_falling_;
  std::map<std::size_t, NumberSlice> korobov_, bernoulli_;
};

/// A registered identity: produces its instances at a given order.
struct Identity {
  std::string id;
  std::string description;
  std::function<std::size_t(std::size_t)> effective_order;  // config order -> order actually checked
  std::function<std::vector<Comparison>(Workbench&)> instances;
  bool optional = false;
};

namespace detail {

inline std::string at_nk(std::size_t n, std::size_t k) {
  return "n=" + std::to_string(n) + ",k=" + std::to_string(k);
}
inline std::string at_n(std::size_t n) { return "n=" + std::to_string(n); }

inline std::function<std::size_t(std::size_t)> capped(std::size_t cap) {
  return [cap](std::size_t order) { return std::min(order, cap); };
}
inline std::size_t uncapped(std::size_t order) { return order; }

inline std::vector<Comparison> compare_matrices(const LowerMatrix& a, const LowerMatrix& b) {
  std::vector<Comparison> out;
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) out.push_back({at_nk(n, k), a[n][k], b[n][k]});
  return out;
}

inline std::vector<Comparison> compare_polys(const std::vector<XPoly>& a, const std::vector<XPoly>& b) {
  std::vector<Comparison> out;
  for (std::size_t n = 0; n < a.size(); ++n) out.push_back({at_n(n), a[n], b[n]});
  return out;
}

/// sum_m polys[m] * table(n,m).
inline std::vector<XPoly> weighted_rows(const std::vector<XPoly>& polys, const Triangle& table) {
  std::vector<XPoly> out;
  for (std::size_t n = 0; n <= table.order(); ++n) {
    XPoly acc;
    for (std::size_t m = 0; m <= n; ++m)
      if (!table.at(n, m).is_zero()) acc += polys[m] * table.at(n, m);
    out.push_back(std::move(acc));
  }
  return out;
}

/// Numbers P_m(1) of a family.
inline std::vector<LambdaPoly> numbers(const PolyFamily& fam) {
  std::vector<LambdaPoly> out;
  for (std::size_t n = 0; n <= fam.order(); ++n) out.push_back(fam.number(n));
  return out;
}

/// (1)_{n,λ} = (1)(1-λ)...(1-(n-1)λ).
inline LambdaPoly one_deg_falling(std::size_t n) { return deg_falling_factorial_of(ring<LambdaPoly>::one(), n); }

/// Multinomial (n-1; parts..., k-1) * prod_j slice(k_j, n - sum_{i>j} k_i), summed
/// over compositions of n-k into m nonnegative parts.
inline LambdaPoly reciprocal_convolution(Workbench& wb, bool korobov_kind, std::size_t n, std::size_t k,
                                         std::size_t m) {
  LambdaPoly total;
  std::vector<std::size_t> parts(m, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t j, std::size_t remaining) {
    if (j + 1 == m) {
      parts[j] = remaining;
      Rational coeff = factorial(n - 1) * factorial(k - 1).inverse();
      for (auto p : parts) coeff = coeff * factorial(p).inverse();
      LambdaPoly term(coeff);
      std::size_t tail = 0;  // sum of parts after j
      for (std::size_t jj = m; jj-- > 0;) {
        const std::size_t r = n - tail;
        const auto& slice = korobov_kind ? wb.korobov_slice(r) : wb.bernoulli_slice(r);
        term *= slice.at(parts[jj]);
        tail += parts[jj];
      }
      total += term;
      return;
    }
    for (std::size_t p = 0; p <= remaining; ++p) {
      parts[j] = p;
      walk(j + 1, remaining - p);
    }
  };
  walk(0, n - k);
  return total;
}

inline LowerMatrix matrix_power(const LowerMatrix& a, std::size_t m) {
  LowerMatrix acc = a;
  for (std::size_t i = 1; i < m; ++i) acc = lower_product(a, acc);
  return acc;
}

/// r^{(m)}_{n,k} as the literal (m-1)-fold index sum over l_1..l_{m-1} in [0, n].
inline LambdaPoly explicit_index_sum(const LowerMatrix& r, std::size_t n, std::size_t k, std::size_t m) {
  const auto entry = [&](std::size_t i, std::size_t j) -> LambdaPoly { return j > i ? LambdaPoly{} : r[i][j]; };
  if (m == 1) return entry(n, k);
  LambdaPoly total;
  std::vector<std::size_t> l(m - 1, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t depth) {
    if (depth == m - 1) {
      LambdaPoly term = entry(n, l[0]);
      for (std::size_t i = 0; i + 1 < m - 1 && !term.is_zero(); ++i) term *= entry(l[i], l[i + 1]);
      if (!term.is_zero()) term *= entry(l[m - 2], k);
      total += term;
      return;
    }
    for (std::size_t v = 0; v <= n; ++v) {
      l[depth] = v;
      walk(depth + 1);
    }
  };
  walk(0);
  return total;
}

inline std::vector<Comparison> series_equal(const std::string& label, const Series<LambdaPoly>& a,
                                            const Series<LambdaPoly>& b) {
  std::vector<Comparison> out;
  const std::size_t N = std::min(a.order(), b.order());
  for (std::size_t n = 0; n <= N; ++n) out.push_back({label + ",t^" + std::to_string(n), a.coeff(n), b.coeff(n)});
  return out;
}

inline std::vector<Comparison> series_equal(const std::string& label, const Series<XPoly>& a,
                                            const Series<XPoly>& b) {
  std::vector<Comparison> out;
  const std::size_t N = std::min(a.order(), b.order());
  for (std::size_t n = 0; n <= N; ++n) out.push_back({label + ",t^" + std::to_string(n), a.coeff(n), b.coeff(n)});
  return out;
}

inline void append(std::vector<Comparison>& into, std::vector<Comparison> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

inline std::vector<Comparison> prefixed(const std::string& prefix, std::vector<Comparison> v) {
  for (auto& c : v) c.where = prefix + ":" + c.where;
  return v;
}

/// Test pairs for the umbral group law.
inline std::vector<std::pair<std::string, ShefferSeq>> umbral_test_sequences(std::size_t N) {
  std::vector<std::pair<std::string, ShefferSeq>> out;
  out.emplace_back("(1,t)", umbral_identity(N));
  out.emplace_back("(1,e_λ(t)-1)", stirling1_sequence(N));
  out.emplace_back("(1,log_λ(1+t))", stirling2_sequence(N));
  out.emplace_back("(e_λ(t),t)", sheffer_from_pair(deg_exp(N), Series<LambdaPoly>::identity(N), N));
  out.emplace_back("(e_λ(t),log_λ(1+t))", sheffer_from_pair(deg_exp(N), deg_log(N), N));
  return out;
}

}  // namespace detail

/// Every identity the suite knows, in report order.
inline const std::vector<Identity>& identity_registry() {
  using namespace detail;
  static const std::vector<Identity> registry = [] {
    std::vector<Identity> r;

    r.push_back({"orth", "S1(λ) * S2(λ) = I and S2(λ) * S1(λ) = I as lower-triangular matrices", uncapped,
                 [](Workbench& wb) {
                   const auto id = identity_matrix(wb.order());
                   auto out = prefixed("S1*S2", compare_matrices(lower_product(wb.s1().rows(), wb.s2().rows()), id));
                   append(out, prefixed("S2*S1", compare_matrices(lower_product(wb.s2().rows(), wb.s1().rows()), id)));
                   return out;
                 }});

    r.push_back({"thm1", "SJ2(n,k) from the doubly iterated e_λ equals sum_m S2(n,m) S2(m,k)", uncapped,
                 [](Workbench& wb) {
                   return compare_matrices(routes::jstirling2_series(wb.order()),
                                           lower_product(wb.s2().rows(), wb.s2().rows()));
                 }});

    r.push_back({"thm2", "S2(n,k) = sum_m SJ2(m,k) S1(n,m)", uncapped, [](Workbench& wb) {
                   return compare_matrices(wb.s2().rows(), lower_product(wb.s1().rows(), wb.j2().rows()));
                 }});

    r.push_back({"cor3", "sum_{m=1}^n B_{m,λ} S1(n,m) = (1)_{n,λ} for n >= 1", uncapped, [](Workbench& wb) {
                   std::vector<Comparison> out;
                   const auto b = numbers(wb.bell());
                   for (std::size_t n = 1; n <= wb.order(); ++n) {
                     LambdaPoly sum;
                     for (std::size_t m = 1; m <= n; ++m) sum += b[m] * wb.s1().at(n, m);
                     out.push_back({at_n(n), sum, one_deg_falling(n)});
                   }
                   return out;
                 }});

    r.push_back({"thm4", "SJ1(n,k) from the doubly iterated log_λ equals sum_m S1(n,m) S1(m,k)", uncapped,
                 [](Workbench& wb) {
                   return compare_matrices(routes::jstirling1_series(wb.order()),
                                           lower_product(wb.s1().rows(), wb.s1().rows()));
                 }});

    r.push_back({"cor5", "SJ1(n,1) = sum_m (m-1)! binom(λ-1,m-1) S1(n,m) for n >= 1", uncapped, [](Workbench& wb) {
                   std::vector<Comparison> out;
                   for (std::size_t n = 1; n <= wb.order(); ++n) {
                     LambdaPoly sum;
                     for (std::size_t m = 1; m <= n; ++m) sum += lambda_shifted_falling(m) * wb.s1().at(n, m);
                     out.push_back({at_n(n), wb.j1().at(n, 1), sum});
                   }
                   return out;
                 }});

    r.push_back({"thm6", "SJ2(n,k) = (1/k!) sum_l binom(k,l) (-1)^(k-l) B_{n,λ}(l) for n >= k", uncapped,
                 [](Workbench& wb) {
                   std::vector<Comparison> out;
                   for (std::size_t n = 0; n <= wb.order(); ++n) {
                     for (std::size_t k = 0; k <= n; ++k) {
                       LambdaPoly sum;
                       for (std::size_t l = 0; l <= k; ++l) {
                         const Rational sign((k - l) % 2 == 0 ? 1 : -1);
                         sum += evaluate_at_x(wb.bell().at(n), LambdaPoly(Rational(static_cast<long>(l)))) *
                                (binomial(k, l) * sign);
                       }
                       out.push_back({at_nk(n, k), wb.j2().at(n, k), sum * factorial(k).inverse()});
                     }
                   }
                   return out;
                 }});

    r.push_back({"eq29", "(1/k!) sum_l binom(k,l) (-1)^(k-l) B_{n,λ}(l) = 0 for 0 <= n < k", uncapped,
                 [](Workbench& wb) {
                   std::vector<Comparison> out;
                   for (std::size_t n = 0; n <= wb.order(); ++n) {
                     for (std::size_t k = n + 1; k <= wb.order(); ++k) {
                       LambdaPoly sum;
                       for (std::size_t l = 0; l <= k; ++l) {
                         const Rational sign((k - l) % 2 == 0 ? 1 : -1);
                         sum += evaluate_at_x(wb.bell().at(n), LambdaPoly(Rational(static_cast<long>(l)))) *
                                (binomial(k, l) * sign);
                       }
                       out.push_back({at_nk(n, k), sum * factorial(k).inverse(), LambdaPoly{}});
                     }
                   }
                   return out;
                 }});

    r.push_back({"thm7", "S1(n,l) = sum_k SJ1(n,k) S2(k,l)", uncapped, [](Workbench& wb) {
                   return compare_matrices(wb.s1().rows(), lower_product(wb.j1().rows(), wb.s2().rows()));
                 }});

    r.push_back({"eq34", "S1(n,1) = sum_k (1)_{k,λ} SJ1(n,k) for n >= 1", uncapped, [](Workbench& wb) {
                   std::vector<Comparison> out;
                   for (std::size_t n = 1; n <= wb.order(); ++n) {
                     LambdaPoly sum;
                     for (std::size_t k = 1; k <= n; ++k) sum += one_deg_falling(k) * wb.j1().at(n, k);
                     out.push_back({at_n(n), wb.s1().at(n, 1), sum});
                   }
                   return out;
                 }});

    r.push_back({"thm8", "J_{n,λ}(x) from its generating function equals sum_k (x)_{k,λ} SJ2(n,k)", uncapped,
                 [](Workbench& wb) {
                   return compare_polys(routes::jindalrae_series(wb.order()), deg_falling_sum(wb.j2().rows()));
                 }});

    r.push_back({"thm9", "B_{n,λ}(x) = sum_m J_{m,λ}(x) S1(n,m)", uncapped, [](Workbench& wb) {
                   return compare_polys(wb.bell().polys(), weighted_rows(wb.jind().polys(), wb.s1()));
                 }});

    r.push_back({"thm10", "J_{n,λ}(x) = sum_m B_{m,λ}(x) S2(n,m)", uncapped, [](Workbench& wb) {
                   return compare_polys(wb.jind().polys(), weighted_rows(wb.bell().polys(), wb.s2()));
                 }});

    r.push_back({"thm11", "G_{n,λ}(x) from its generating function equals sum_k (x)_{k,λ} SJ1(n,k)", uncapped,
                 [](Workbench& wb) {
                   return compare_polys(routes::gaenari_series(wb.order()), deg_falling_sum(wb.j1().rows()));
                 }});

    r.push_back({"thm12", "(x)_n = sum_m G_{m,λ}(x) S2(n,m)", uncapped, [](Workbench& wb) {
                   std::vector<XPoly> ff;
                   for (std::size_t n = 0; n <= wb.order(); ++n) ff.push_back(falling_factorial(n));
                   return compare_polys(ff, weighted_rows(wb.gaen().polys(), wb.s2()));
                 }});

    r.push_back({"eq44", "sum_m G_{m,λ} S2(n,m) is 1 for n <= 1 and 0 for n >= 2", uncapped, [](Workbench& wb) {
                   std::vector<Comparison> out;
                   const auto g = numbers(wb.gaen());
                   out.push_back({"G_0", g[0], LambdaPoly(Rational(1))});
                   for (std::size_t n = 0; n <= wb.order(); ++n) {
                     LambdaPoly sum;
                     for (std::size_t m = 0; m <= n; ++m) sum += g[m] * wb.s2().at(n, m);
                     out.push_back({at_n(n), sum, LambdaPoly(Rational(n <= 1 ? 1 : 0))});
                   }
                   return out;
                 }});

    r.push_back({"cor13", "G_{n,λ} = λ^(n-1) (1)_{n,1/λ} = (λ-1)(λ-2)...(λ-n+1) for n >= 1", uncapped,
                 [](Workbench& wb) {
                   std::vector<Comparison> out;
                   const auto g = numbers(wb.gaen());
                   for (std::size_t n = 1; n <= wb.order(); ++n) {
                     // λ^(n-1) * prod_{j<n} (1 - j/λ) = prod_{j=1}^{n-1} (λ - j)
                     LambdaPoly rhs(Rational(1));
                     for (std::size_t j = 1; j < n; ++j) rhs *= LambdaPoly{Rational(-static_cast<long>(j)), Rational(1)};
                     out.push_back({at_n(n), g[n], rhs});
                   }
                   return out;
                 }});

    r.push_back({"eq46", "sum_n G_{n,λ}(x) t^n/n! = (1 + log_λ(1+t))^x", uncapped, [](Workbench& wb) {
                   const auto lhs = Series<XPoly>::from_egf(wb.order(), wb.gaen().polys());
                   return series_equal("egf", lhs, binomial_power_x(deg_log(wb.order())));
                 }});

    r.push_back({"eq22", "SJ2(n,1) = B_{n,λ} = sum_m S2(n,m) (1)_{m,λ} for n >= 1", uncapped, [](Workbench& wb) {
                   std::vector<Comparison> out;
                   const auto b = numbers(wb.bell());
                   for (std::size_t n = 1; n <= wb.order(); ++n) {
                     LambdaPoly sum;
                     for (std::size_t m = 1; m <= n; ++m) sum += wb.s2().at(n, m) * one_deg_falling(m);
                     out.push_back({at_n(n) + ":SJ2=B", wb.j2().at(n, 1), b[n]});
                     out.push_back({at_n(n) + ":B=sum", b[n], sum});
                   }
                   return out;
                 }});

    r.push_back({"eq24", "S2(n,1) = sum_m B_{m,λ} S1(n,m) = (1)_{n,λ} for n >= 1", uncapped, [](Workbench& wb) {
                   std::vector<Comparison> out;
                   const auto b = numbers(wb.bell());
                   for (std::size_t n = 1; n <= wb.order(); ++n) {
                     LambdaPoly sum;
                     for (std::size_t m = 1; m <= n; ++m) sum += b[m] * wb.s1().at(n, m);
                     out.push_back({at_n(n) + ":S2=sum", wb.s2().at(n, 1), sum});
                     out.push_back({at_n(n) + ":S2=(1)_n", wb.s2().at(n, 1), one_deg_falling(n)});
                   }
                   return out;
                 }});

    r.push_back({"eq49", "(x)_{n,λ} = sum_m G_{m,λ}(x) SJ2(n,m)", uncapped, [](Workbench& wb) {
                   return compare_polys(wb.deg_falling(), weighted_rows(wb.gaen().polys(), wb.j2()));
                 }});

    r.push_back({"eq51", "(x)_{n,λ} = sum_m J_{m,λ}(x) SJ1(n,m)", uncapped, [](Workbench& wb) {
                   return compare_polys(wb.deg_falling(), weighted_rows(wb.jind().polys(), wb.j1()));
                 }});

    r.push_back({"eq52", "sum_m G_{m,λ}(x) SJ2(n,m) = sum_m J_{m,λ}(x) SJ1(n,m)", uncapped, [](Workbench& wb) {
                   return compare_polys(weighted_rows(wb.gaen().polys(), wb.j2()),
                                        weighted_rows(wb.jind().polys(), wb.j1()));
                 }});

    r.push_back({"eq17", "T(n,k) = sum_m S2(n,m) S2(m,k) equals the EGF of (e^(e^t-1)-1)^k/k!", uncapped,
                 [](Workbench& wb) { return compare_matrices(wb.t().rows(), routes::t_numbers_series(wb.order())); }});

    r.push_back({"eq19", "T(n,k) equals the multinomial Bell-number sum over compositions", capped(8),
                 [](Workbench& wb) {
                   return compare_matrices(wb.t().rows(), routes::t_numbers_multinomial(wb.order()));
                 }});

    r.push_back({"bell-t", "T(n,1) = Bell(n) by set-partition enumeration for n >= 1", capped(10),
                 [](Workbench& wb) {
                   std::vector<Comparison> out;
                   for (std::size_t n = 1; n <= wb.order(); ++n) {
                     out.push_back({at_n(n), wb.t().at(n, 1),
                                    Rational(oracle::bell_number_classical(static_cast<int>(n)))});
                   }
                   return out;
                 }});

    r.push_back({"classical", "λ = 0 specializations of S1, S2 and B_{n,λ}(1) match brute-force oracles",
                 capped(10), [](Workbench& wb) {
                   std::vector<Comparison> out;
                   const auto b = numbers(wb.bell());
                   for (std::size_t n = 0; n <= wb.order(); ++n) {
                     const int ni = static_cast<int>(n);
                     for (std::size_t k = 0; k <= n; ++k) {
                       const int ki = static_cast<int>(k);
                       out.push_back({"S1:" + at_nk(n, k), specialize(wb.s1().at(n, k), Rational(0)),
                                      Rational(oracle::signed_cycle_oracle(ni, ki))});
                       out.push_back({"S2:" + at_nk(n, k), specialize(wb.s2().at(n, k), Rational(0)),
                                      Rational(oracle::partition_oracle(ni, ki))});
                     }
                     out.push_back({"Bell:" + at_n(n), specialize(b[n], Rational(0)),
                                    Rational(oracle::bell_number_classical(ni))});
                   }
                   return out;
                 }});

    r.push_back({"limits", "λ = 0 turns (x)_{n,λ}, e_λ(t), log_λ(1+t) into x^n, e^t, log(1+t)", uncapped,
                 [](Workbench& wb) {
                   std::vector<Comparison> out;
                   const std::size_t N = wb.order();
                   for (std::size_t n = 0; n <= N; ++n) {
                     out.push_back({"(x)_{n,0}:" + at_n(n), specialize(deg_falling_factorial(n), Rational(0)),
                                    XPoly::monomial(ring<LambdaPoly>::one(), n)});
                   }
                   std::vector<LambdaPoly> exp_c(N + 1), log_c(N + 1);
                   for (std::size_t n = 0; n <= N; ++n) exp_c[n] = LambdaPoly(factorial(n).inverse());
                   for (std::size_t n = 1; n <= N; ++n)
                     log_c[n] = LambdaPoly(Rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n)));
                   append(out, series_equal("exp", specialize(deg_exp(N), Rational(0)), Series<LambdaPoly>(N, exp_c)));
                   append(out, series_equal("log", specialize(deg_log(N), Rational(0)), Series<LambdaPoly>(N, log_c)));
                   return out;
                 }});

    r.push_back({"inverse-pairs",
                 "compose(f, comp_inverse(f)) = t to order 16 for the four basic delta series; "
                 "comp_inverse(e_λ(t)-1) = log_λ(1+t); comp_inverse(e_λ(e_λ(t)-1)-1) = log_λ(log_λ(1+t)+1)",
                 [](std::size_t order) { return std::max<std::size_t>(order, 16); },
                 [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   std::vector<Comparison> out;
                   const std::vector<std::pair<std::string, Series<LambdaPoly>>> fs{
                       {"e-1", deg_exp_minus_one(N)},
                       {"log", deg_log(N)},
                       {"ee", iterated_deg_exp(N)},
                       {"ll", iterated_deg_log(N)}};
                   const auto t = Series<LambdaPoly>::identity(N);
                   for (const auto& [label, f] : fs) {
                     const auto inv = comp_inverse(f);
                     append(out, series_equal(label + ":f(finv)", compose(f, inv), t));
                     append(out, series_equal(label + ":finv(f)", compose(inv, f), t));
                   }
                   append(out, series_equal("log=inv(e-1)", comp_inverse(deg_exp_minus_one(N)), deg_log(N)));
                   const std::size_t M = std::min<std::size_t>(N, 12);
                   append(out, series_equal("ll=inv(ee)", comp_inverse(iterated_deg_exp(M)), iterated_deg_log(M)));
                   return out;
                 }});

    r.push_back({"routes-triangles", "S1(λ), S2(λ): series extraction equals falling-factorial basis change",
                 uncapped, [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   auto out = prefixed("S2", compare_matrices(routes::stirling2_deg_series(N), routes::stirling2_deg_basis(N)));
                   append(out, prefixed("S1", compare_matrices(routes::stirling1_deg_series(N), routes::stirling1_deg_basis(N))));
                   return out;
                 }});

    r.push_back({"routes-families",
                 "B_{n,λ}(x), Bel_{n,λ}(x): explicit sums equal generating-function extraction", uncapped,
                 [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   auto out = prefixed("B", compare_polys(deg_falling_sum(wb.s2().rows()), routes::deg_bell_series(N)));
                   append(out, prefixed("Bel", compare_polys(deg_falling_sum(wb.s2_classical().rows()),
                                                             routes::newtype_bell_series(N))));
                   return out;
                 }});

    r.push_back({"eq59", "sequences of (1, (e^{λt}-1)/λ) and (1, log_λ(1+t)) are (x)_{n,λ} and sum_k S2(n,k) x^k",
                 uncapped, [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   auto out = prefixed("s", compare_polys(deg_falling_sequence(N).polynomials(), wb.deg_falling()));
                   append(out, prefixed("r", compare_matrices(stirling2_sequence(N).matrix(), wb.s2().rows())));
                   append(out, prefixed("r1", compare_matrices(stirling1_sequence(N).matrix(), wb.s1().rows())));
                   return out;
                 }});

    r.push_back({"eq61", "second umbral power of the S2(λ) sequence has matrix SJ2; of the S1(λ) sequence, SJ1",
                 uncapped, [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   auto out = prefixed("SJ2", compare_matrices(umbral_power(stirling2_sequence(N), 2).matrix(), wb.j2().rows()));
                   append(out, prefixed("SJ1", compare_matrices(umbral_power(stirling1_sequence(N), 2).matrix(), wb.j1().rows())));
                   return out;
                 }});

    r.push_back({"eq60", "J_{n,λ}(x) = r^(2) ∘ (x)_{n,λ} with r the S2(λ) sequence", uncapped, [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   const auto u = umbral_compose(umbral_power(stirling2_sequence(N), 2), deg_falling_sequence(N));
                   return compare_polys(u.polynomials(), wb.jind().polys());
                 }});

    r.push_back({"eq66", "G_{n,λ}(x) = r^(2) ∘ (x)_{n,λ} with r the S1(λ) sequence", uncapped, [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   const auto u = umbral_compose(umbral_power(stirling1_sequence(N), 2), deg_falling_sequence(N));
                   return compare_polys(u.polynomials(), wb.gaen().polys());
                 }});

    r.push_back({"thm14-group",
                 "matrix product of two Sheffer sequences is the sequence of (g h(f), l(f)); x^n is the identity",
                 capped(10), [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   const auto seqs = umbral_test_sequences(N);
                   const auto id = umbral_identity(N);
                   std::vector<Comparison> out;
                   for (const auto& [qn, q] : seqs) {
                     for (const auto& [pn, p] : seqs) {
                       const auto composed = umbral_compose(q, p);
                       const auto [g, f] = composed_pair(q, p);
                       const auto regenerated = sheffer_from_pair(g, f, N);
                       append(out, prefixed(qn + "∘" + pn, compare_matrices(composed.matrix(), regenerated.matrix())));
                     }
                     append(out, prefixed("id∘" + qn, compare_matrices(umbral_compose(id, q).matrix(), q.matrix())));
                     append(out, prefixed(qn + "∘id", compare_matrices(umbral_compose(q, id).matrix(), q.matrix())));
                   }
                   return out;
                 }});

    r.push_back({"thm14-inverse", "s composed with the sequence of (g(f̄)^(-1), f̄) is the identity, both ways",
                 capped(10), [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   std::vector<Comparison> out;
                   for (const auto& [name, s] : umbral_test_sequences(N)) {
                     const auto inv = umbral_inverse(s);
                     append(out, prefixed("inv∘" + name, compare_matrices(umbral_compose(inv, s).matrix(), identity_matrix(N))));
                     append(out, prefixed(name + "∘inv", compare_matrices(umbral_compose(s, inv).matrix(), identity_matrix(N))));
                   }
                   return out;
                 }});

    r.push_back({"eq56", "umbral powers m = 2, 3 equal the explicit multi-index sums over l_1..l_{m-1}", capped(10),
                 [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   std::vector<Comparison> out;
                   const std::vector<std::pair<std::string, ShefferSeq>> seqs{
                       {"S2", stirling2_sequence(N)},
                       {"S1", stirling1_sequence(N)},
                       {"appell", sheffer_from_pair(deg_exp(N), Series<LambdaPoly>::identity(N), N)}};
                   for (const auto& [name, r] : seqs) {
                     for (std::size_t m : {2, 3}) {
                       const auto power = umbral_power(r, m);
                       for (std::size_t n = 0; n <= N; ++n) {
                         for (std::size_t k = 0; k <= n; ++k) {
                           out.push_back({name + ",m=" + std::to_string(m) + ":" + at_nk(n, k), power.matrix()[n][k],
                                          explicit_index_sum(r.matrix(), n, k, m)});
                         }
                       }
                     }
                   }
                   return out;
                 }});

    r.push_back({"cor15",
                 "EGF of r^(m) ∘ s equals the EGF of s at l̄^m(t); reproduces the Jindalrae and Gaenari EGFs",
                 capped(10), [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   std::vector<Comparison> out;
                   const auto s = deg_falling_sequence(N);
                   const std::vector<std::tuple<std::string, ShefferSeq, Series<LambdaPoly>>> cases{
                       {"J", stirling2_sequence(N), iterated_deg_exp(N)},
                       {"G", stirling1_sequence(N), iterated_deg_log(N)}};
                   for (const auto& [name, r, inner] : cases) {
                     for (std::size_t m : {1, 2, 3}) {
                       const auto composed = umbral_compose(umbral_power(r, m), s).egf();
                       const auto lbar_m = compositional_power(comp_inverse(r.f()), m);
                       append(out, series_equal(name + ",m=" + std::to_string(m), composed,
                                                compose(s.egf(), lift(lbar_m))));
                     }
                     const auto composed2 = umbral_compose(umbral_power(r, 2), s).egf();
                     append(out, series_equal(name + ",egf", composed2, deg_exp_x_of(inner)));
                   }
                   return out;
                 }});

    r.push_back({"cor15-inverse", "the compositional inverse of l^m(f(t)) is f̄(l̄^m(t))", capped(10),
                 [](Workbench& wb) {
                   const std::size_t N = wb.order();
                   std::vector<Comparison> out;
                   const auto f = lambda_scaled_expm1(N);
                   const std::vector<std::pair<std::string, Series<LambdaPoly>>> ls{
                       {"log", deg_log(N)}, {"e-1", deg_exp_minus_one(N)}};
                   for (const auto& [name, l] : ls) {
                     for (std::size_t m : {1, 2, 3}) {
                       const auto lhs = comp_inverse(compose(compositional_power(l, m), f));
                       const auto rhs = compose(comp_inverse(f), compositional_power(comp_inverse(l), m));
                       append(out, series_equal(name + ",m=" + std::to_string(m), lhs, rhs));
                     }
                   }
                   return out;
                 }});

    const auto korobov_m1 = [](bool korobov_kind) {
      return [korobov_kind](Workbench& wb) {
        std::vector<Comparison> out;
        for (std::size_t n = 1; n <= wb.order(); ++n) {
          for (std::size_t k = 1; k <= n; ++k) {
            const auto& slice = korobov_kind ? wb.korobov_slice(n) : wb.bernoulli_slice(n);
            const auto& lhs = korobov_kind ? wb.s2().at(n, k) : wb.s1().at(n, k);
            out.push_back({at_nk(n, k), lhs, slice.at(n - k) * binomial(n - 1, k - 1)});
          }
        }
        return out;
      };
    };
    const auto korobov_mm = [](bool korobov_kind, std::size_t m) {
      return [korobov_kind, m](Workbench& wb) {
        std::vector<Comparison> out;
        const auto& base = korobov_kind ? wb.s2().rows() : wb.s1().rows();
        const auto lhs = matrix_power(base, m);
        for (std::size_t n = 1; n <= wb.order(); ++n)
          for (std::size_t k = 1; k <= n; ++k)
            out.push_back({at_nk(n, k), lhs[n][k], reciprocal_convolution(wb, korobov_kind, n, k, m)});
        return out;
      };
    };

    r.push_back({"s31-m1", "S2(n,k) = binom(n-1,k-1) K_{n-k,(n)}(λ) for 1 <= k <= n", capped(10), korobov_m1(true)});
    r.push_back({"s31-m2", "SJ2(n,k) = sum_{k1+k2=n-k} multinom(n-1;k1,k2,k-1) K_{k2,(n)} K_{k1,(n-k2)}",
                 capped(10), korobov_mm(true, 2)});
    r.push_back({"s32-m1", "S1(n,k) = binom(n-1,k-1) β_{n-k,(n)}(λ) for 1 <= k <= n", capped(10), korobov_m1(false)});
    r.push_back({"s32-m2", "SJ1(n,k) = sum_{k1+k2=n-k} multinom(n-1;k1,k2,k-1) β_{k2,(n)} β_{k1,(n-k2)}",
                 capped(10), korobov_mm(false, 2)});
    r.push_back({"s31-m3", "triple S2(λ) product as the three-fold Korobov convolution (optional)", capped(8),
                 korobov_mm(true, 3), true});
    r.push_back({"s32-m3", "triple S1(λ) product as the three-fold degenerate Bernoulli convolution (optional)",
                 capped(8), korobov_mm(false, 3), true});
    return r;
  }();
  return registry;
}

inline const Identity* find_identity(const std::string& id) {
  for (const auto& i : identity_registry())
    if (i.id == id) return &i;
  return nullptr;
}

/// Evaluates every selected identity exactly, symbolically in λ and then at
/// each requested rational λ. Results follow the order of `identities`; within
/// an identity the symbolic result comes first, then specializations in the
/// order given. Unknown ids in the filter are rejected.
inline std::vector<CheckResult> run_identities(const std::vector<Identity>& identities, const SuiteConfig& config) {
  if (config.order < 1) throw precondition_error("run_suite: order must be at least 1");
  if (config.identity_filter) {
    for (const auto& id : *config.identity_filter) {
      const bool known = std::any_of(identities.begin(), identities.end(), [&](const Identity& i) { return i.id == id; });
      if (!known) throw precondition_error("run_suite: unknown identity id '" + id + "'");
    }
  }
  const auto selected = [&](const Identity& i) {
    if (config.identity_filter) {
      return std::find(config.identity_filter->begin(), config.identity_filter->end(), i.id) !=
             config.identity_filter->end();
    }
    return !i.optional || config.include_optional;
  };

  std::map<std::size_t, std::unique_ptr<Workbench>> benches;
  std::vector<CheckResult> results;
  for (const auto& identity : identities) {
    if (!selected(identity)) continue;
    const std::size_t order = identity.effective_order(config.order);
    auto& bench = benches[order];
    if (!bench) bench = std::make_unique<Workbench>(order);

    std::vector<Comparison> instances;
    std::optional<std::string> error;
    try {
      instances = identity.instances(*bench);
    } catch (const std::exception& e) {
      error = std::string("evaluation failed: ") + e.what();
    }
    if (!error && instances.empty()) error = "no instances generated";

    const auto evaluate = [&](const std::optional<Rational>& lambda) {
      CheckResult res{identity.id, order, lambda ? lambda->to_string() : "symbolic", CheckStatus::Pass, std::nullopt};
      if (error) {
        res.status = CheckStatus::Fail;
        res.witness = *error;
        return res;
      }
      for (const auto& c : instances) {
        const Value lhs = lambda ? specialize(c.lhs, *lambda) : c.lhs;
        const Value rhs = lambda ? specialize(c.rhs, *lambda) : c.rhs;
        if (!values_equal(lhs, rhs)) {
          res.status = CheckStatus::Fail;
          res.witness = c.where + ": " + to_text(lhs) + " != " + to_text(rhs);
          break;
        }
      }
      return res;
    };
    results.push_back(evaluate(std::nullopt));
    for (const auto& lambda : config.lambda_specializations) results.push_back(evaluate(lambda));
  }
  return results;
}

inline std::vector<CheckResult> run_suite(const SuiteConfig& config) {
  return run_identities(identity_registry(), config);
}

inline bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.status == CheckStatus::Pass; });
}

}  // namespace degen
