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

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "degen/commands.hpp"
#include "degen/identities.hpp"
#include "degen/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::optional<degen::Rational> parse_optional(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return degen::Rational::parse(text);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw degen::precondition_error("unsupported --format '" + format + "'");
}

void emit(const degen::Document& doc, const std::string& format) {
  if (format == "csv") {
    std::cout << degen::render_csv(doc);
  } else {
    std::cout << degen::render_json(degen::to_json(doc));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tables of degenerate Stirling-type numbers and polynomials"};
  app.require_subcommand(1);

  std::string kind, family, format = "json", lambda_text, x_text, expr;
  std::size_t order = 0;
  std::optional<std::size_t> r;

  auto* triangle = app.add_subcommand("triangle", "emit a number triangle or a Korobov/degenerate Bernoulli slice");
  triangle->add_option("--kind", kind, "one of " + degen::triangle_kind_list())->required();
  triangle->add_option("--order", order, "largest row index (at most 24)")->required();
  triangle->add_option("--r", r, "order r for korobov and degbernoulli (default 1)");
  triangle->add_option("--lambda", lambda_text, "specialize λ to a rational p/q");
  triangle->add_option("--format", format, "json or csv");

  auto* poly = app.add_subcommand("poly", "emit P_0..P_N of a polynomial family");
  poly->add_option("--family", family, "one of " + degen::family_kind_list())->required();
  poly->add_option("--order", order, "largest index (at most 24)")->required();
  poly->add_option("--lambda", lambda_text, "specialize λ to a rational p/q");
  poly->add_option("--x", x_text, "evaluate at x = p/q");
  poly->add_option("--format", format, "json or csv");

  std::size_t verify_order = 12;
  std::vector<std::string> lambda_list, filter;
  bool include_optional = false, list_only = false;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--order", verify_order, "order N (default 12)");
  verify->add_option("--lambda-list", lambda_list, "comma-separated rationals to specialize λ at")->delimiter(',');
  verify->add_option("--filter", filter, "comma-separated identity ids")->delimiter(',');
  verify->add_flag("--optional", include_optional, "also run checks that are off by default");
  verify->add_flag("--list", list_only, "list identity ids and exit");
  verify->add_option("--format", verify_format, "table or json");

  std::string eval_format = "text";
  auto* eval = app.add_subcommand("eval", "evaluate one value, e.g. s2deg(4,2), gaenari(3), korobov(3,2)");
  eval->add_option("--expr", expr, "name(n) or name(n,k)")->required();
  eval->add_option("--lambda", lambda_text, "specialize λ to a rational p/q");
  eval->add_option("--x", x_text, "evaluate at x = p/q");
  eval->add_option("--format", eval_format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*triangle) {
      require_format(format, {"json", "csv"});
      emit(degen::triangle_document(kind, order, r, parse_optional(lambda_text)), format);
      return kExitOk;
    }
    if (*poly) {
      require_format(format, {"json", "csv"});
      emit(degen::poly_document(family, order, parse_optional(lambda_text), parse_optional(x_text)), format);
      return kExitOk;
    }
    if (*eval) {
      require_format(eval_format, {"text", "json"});
      const auto cell = degen::eval_expression(expr, parse_optional(lambda_text), parse_optional(x_text));
      if (eval_format == "json") {
        std::cout << degen::render_json(degen::to_json(cell));
      } else {
        std::cout << degen::cell_text(cell) << '\n';
      }
      return kExitOk;
    }
    if (*verify) {
      require_format(verify_format, {"table", "json"});
      if (list_only) {
        for (const auto& id : degen::identity_registry()) {
          std::cout << id.id << (id.optional ? " (optional)" : "") << "  " << id.description << '\n';
        }
        return kExitOk;
      }
      degen::SuiteConfig config;
      config.order = verify_order;
      config.include_optional = include_optional;
      for (const auto& l : lambda_list) config.lambda_specializations.push_back(degen::Rational::parse(l));
      if (!filter.empty()) config.identity_filter = filter;
      const auto results = degen::run_suite(config);

      if (verify_format == "json") {
        degen::json params = degen::json::object();
        params["order"] = verify_order;
        params["lambda_list"] = degen::json::array();
        for (const auto& l : config.lambda_specializations) params["lambda_list"].push_back(l.to_string());
        params["filter"] = filter;
        params["optional"] = include_optional;
        std::cout << degen::render_json(degen::report_json(results, params));
      } else {
        std::cout << degen::report_table(results);
      }
      return degen::all_pass(results) ? kExitOk : kExitFailed;
    }
  } catch (const degen::precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
