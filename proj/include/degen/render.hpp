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

// Canonical JSON and CSV rendering. Rationals are strings ("num/den", or
// "num" when integral); λ-polynomials are arrays ascending in λ; x-polynomials
// are arrays (ascending in x) of λ-arrays. Zero renders as "0" / ["0"].

#include <json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "degen/identities.hpp"
#include "degen/poly.hpp"

namespace degen {

inline constexpr const char* kGenerator = "degen";
inline constexpr const char* kVersion = "1.0.0";

using json = nlohmann::json;

/// A rendered cell: scalar, λ-poly, x-poly with rational coefficients, or x-poly over λ.
using Cell = std::variant<Rational, LambdaPoly, std::vector<Rational>, XPoly>;

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const LambdaPoly& p) {
  json arr = json::array();
  if (p.is_zero()) arr.push_back("0");
  for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
  return arr;
}

inline json to_json(const std::vector<Rational>& v) {
  json arr = json::array();
  if (v.empty()) arr.push_back("0");
  for (const auto& c : v) arr.push_back(c.to_string());
  return arr;
}

inline json to_json(const XPoly& p) {
  json arr = json::array();
  if (p.is_zero()) arr.push_back(to_json(LambdaPoly{}));
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

inline json to_json(const Cell& c) {
  return std::visit([](const auto& v) { return to_json(v); }, c);
}

/// x-polynomial with all λ-coefficients constant, as plain rationals.
inline std::vector<Rational> rational_coefficients(const XPoly& p) {
  std::vector<Rational> out;
  for (const auto& c : p.coefficients()) {
    const auto s = ring<LambdaPoly>::as_scalar(c);
    if (!s) throw precondition_error("rational_coefficients: coefficient " + to_text(c) + " still depends on λ");
    out.push_back(*s);
  }
  return out;
}

inline std::string cell_text(const Cell& c) {
  if (const auto* v = std::get_if<std::vector<Rational>>(&c)) {
    std::vector<LambdaPoly> lifted;
    for (const auto& r : *v) lifted.emplace_back(r);
    return to_text(XPoly(std::move(lifted)));
  }
  if (const auto* r = std::get_if<Rational>(&c)) return to_text(*r);
  if (const auto* p = std::get_if<LambdaPoly>(&c)) return to_text(*p);
  return to_text(std::get<XPoly>(c));
}

/// One row of an output document: index n, optional k, and a value.
struct Entry {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  Cell value;
};

struct Document {
  std::string kind;
  std::size_t order = 0;
  std::vector<Entry> entries;
  json parameters = json::object();
};

inline json to_json(const Document& doc) {
  json entries = json::array();
  for (const auto& e : doc.entries) {
    json row = json::object();
    row["n"] = e.n;
    if (e.k) row["k"] = *e.k;
    row["value"] = to_json(e.value);
    entries.push_back(std::move(row));
  }
  json out = json::object();
  out["kind"] = doc.kind;
  out["order"] = doc.order;
  out["entries"] = std::move(entries);
  out["metadata"] = {{"generator", kGenerator}, {"version", kVersion}, {"parameters", doc.parameters}};
  return out;
}

/// Keys come out sorted (nlohmann's default object is ordered by key).
inline std::string render_json(const json& j) { return j.dump(2) + "\n"; }

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_csv(const Document& doc) {
  const bool has_k = !doc.entries.empty() && doc.entries.front().k.has_value();
  std::ostringstream os;
  os << (has_k ? "n,k,value\n" : "n,value\n");
  for (const auto& e : doc.entries) {
    os << e.n << ',';
    if (has_k) os << *e.k << ',';
    os << csv_quote(cell_text(e.value)) << '\n';
  }
  return os.str();
}

inline json to_json(const CheckResult& r) {
  json j = json::object();
  j["id"] = r.identity_id;
  j["order"] = r.order;
  j["lambda"] = r.lambda;
  j["status"] = r.status == CheckStatus::Pass ? "pass" : "fail";
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

inline json report_json(const std::vector<CheckResult>& results, const json& parameters) {
  json list = json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    list.push_back(to_json(r));
    if (r.status == CheckStatus::Fail) ++failed;
  }
  json out = json::object();
  out["kind"] = "verify";
  out["results"] = std::move(list);
  out["summary"] = {{"checks", results.size()}, {"failed", failed}, {"passed", results.size() - failed}};
  out["metadata"] = {{"generator", kGenerator}, {"version", kVersion}, {"parameters", parameters}};
  return out;
}

inline std::string report_table(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    const bool pass = r.status == CheckStatus::Pass;
    if (!pass) ++failed;
    os << (pass ? "PASS" : "FAIL") << "  " << r.identity_id << "  order=" << r.order << "  lambda=" << r.lambda;
    if (r.witness) os << "  " << *r.witness;
    os << '\n';
  }
  os << results.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

}  // namespace degen
