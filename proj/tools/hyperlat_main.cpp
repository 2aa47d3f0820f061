//  Copyright 2026 The hyperlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

//  Command-line front end. Exit status: 0 when every check passed (or the
//  evaluation/table succeeded), 1 when a verification check failed, 2 on
//  usage or input errors.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlat/eval.hpp"
#include "hyperlat/suites.hpp"
#include "hyperlat/unit_interval.hpp"

namespace {

using namespace hyperlat;

struct Options {
  std::string carrier = "unit";
  std::string pair;
  std::string quad;
  std::string suite = "full";
  std::string format = "text";
  std::string op = "hmeet";
  std::string expression;
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;
  long long denominator_bound = 64;
  std::size_t max_elements = 64;
};

/// Exactly one member is set; `unit` is the dense rational chain and
/// everything else builds a finite lattice.
struct LoadedCarrier {
  std::optional<UnitInterval> unit;
  std::optional<FiniteLattice> finite;
};

std::optional<long long> prefixed_count(const std::string& src,
                                        std::string_view prefix) {
  if (!src.starts_with(prefix)) return std::nullopt;
  const std::string_view digits = std::string_view(src).substr(prefix.size());
  long long n = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw MalformedDocument("carrier '" + src + "': expected an integer after '" +
                            std::string(prefix) + "'");
  }
  return n;
}

LoadedCarrier load_carrier(const Options& opt) {
  LoadedCarrier out;
  if (opt.carrier == "unit") {
    out.unit.emplace();
    return out;
  }
  if (auto n = prefixed_count(opt.carrier, "chain:")) {
    if (*n < 2) throw MalformedDocument("carrier 'chain:N' requires N >= 2");
    out.finite = FiniteLattice::chain_grid(static_cast<std::size_t>(*n));
  } else if (auto n = prefixed_count(opt.carrier, "bool:")) {
    if (*n < 1 || *n > 5) {
      throw MalformedDocument("carrier 'bool:N' requires 1 <= N <= 5");
    }
    out.finite = FiniteLattice::powerset(static_cast<std::size_t>(*n));
  } else {
    out.finite = FiniteLattice::from_document_file(opt.carrier);
  }
  if (out.finite->size() > opt.max_elements) {
    throw MalformedDocument(
        "carrier '" + opt.carrier + "' has " + std::to_string(out.finite->size()) +
        " elements, above the cap of " + std::to_string(opt.max_elements) +
        "; raise --max-elements to allow it");
  }
  return out;
}

std::string trimmed(std::string s) {
  const auto from = s.find_first_not_of(" \t");
  const auto to = s.find_last_not_of(" \t");
  if (from == std::string::npos) return "";
  return s.substr(from, to - from + 1);
}

template <Carrier C>
HyperConnective<C> build_hyper(const C& c, const Options& opt,
                               const SampleParams& p) {
  if (!opt.quad.empty()) {
    const auto comma = opt.quad.find(',');
    if (comma == std::string::npos) {
      throw MalformedDocument("--quad expects two pair names 'outer,inner'");
    }
    const std::string outer = trimmed(opt.quad.substr(0, comma));
    const std::string inner = trimmed(opt.quad.substr(comma + 1));
    auto q = make_quadruple(c, builtin_pair(outer, c), builtin_pair(inner, c), p);
    return HyperConnective<C>::from_quadruple(c, std::move(q));
  }
  const std::string name = opt.pair.empty() ? "meet-join" : opt.pair;
  return HyperConnective<C>::from_pair(c, builtin_pair(name, c));
}

template <Carrier C>
Report run_suite(const C& c, const HyperConnective<C>& h, const Options& opt,
                 const SampleParams& p) {
  const std::string& s = opt.suite;
  if (s == "full") return run_full_regression(c, h, p);
  if (s == "lattice") {
    if constexpr (std::same_as<C, FiniteLattice>) {
      return check_demorgan_lattice(c);
    } else {
      return check_carrier_laws(c, p);
    }
  }
  if (s == "connectives") return check_connective_axioms(c, h, p);
  if (s == "duality") return check_duality_suite(c, h, p);
  if (s == "cond32") return check_cond32_suite(c, h, p);
  if (s == "hyper") {
    return check_hyper_properties(c, h, p, closed_forms_trustworthy(c, h, p));
  }
  if (s == "superlattice") {
    return check_superlattice(c, h, p, closed_forms_trustworthy(c, h, p));
  }
  if (s == "a6a8") {
    if constexpr (FiniteCarrier<C>) {
      return check_a6_a8(c, h, p).report;
    } else {
      throw InfiniteCarrier(
          "suite 'a6a8' needs an enumerable carrier; use chain:N, bool:N or a "
          "lattice document");
    }
  }
  return check_order_characterization(c, h, p);  // "prop41"
}

template <Carrier C>
int cmd_check(const C& c, const Options& opt, const SampleParams& p) {
  const auto h = build_hyper(c, opt, p);
  const Report r = run_suite(c, h, opt, p);
  if (opt.format == "json") {
    std::cout << r.to_json() << "\n";
  } else {
    std::cout << r.to_text();
  }
  return r.all_passed() ? 0 : 1;
}

template <Carrier C>
int cmd_eval(const C& c, const Options& opt, const SampleParams& p) {
  const auto h = build_hyper(c, opt, p);
  const Evaluator<C> ev(c, h);
  std::cout << ev.render(ev.evaluate(opt.expression)) << "\n";
  return 0;
}

int cmd_table(const FiniteLattice& l, const Options& opt, const SampleParams& p) {
  const auto h = build_hyper(l, opt, p);
  const HyperOp op = opt.op == "hjoin" ? HyperOp::Join : HyperOp::Meet;
  const std::size_t n = l.size();

  std::vector<std::vector<Interval<FiniteLattice>>> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      grid[i].push_back(h.apply(op, l.element(i), l.element(j)));
    }
  }

  if (opt.format == "json") {
    nlohmann::json j;
    j["carrier"] = l.name();
    j["connectives"] = h.description();
    j["op"] = opt.op;
    j["elements"] = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) j["elements"].push_back(l.format(l.element(i)));
    j["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t jx = 0; jx < n; ++jx) {
        row.push_back({{"lo", l.format(grid[i][jx].lo())},
                       {"hi", l.format(grid[i][jx].hi())}});
      }
      j["rows"].push_back(std::move(row));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::vector<std::string> cells(n * n);
  std::vector<std::size_t> width(n);
  std::size_t label_width = 0;
  for (std::size_t i = 0; i < n; ++i) {
    label_width = std::max(label_width, l.format(l.element(i)).size());
  }
  for (std::size_t j = 0; j < n; ++j) {
    width[j] = l.format(l.element(j)).size();
    for (std::size_t i = 0; i < n; ++i) {
      cells[i * n + j] = format_interval(l, grid[i][j]);
      width[j] = std::max(width[j], cells[i * n + j].size());
    }
  }

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::cout << opt.op << " table, carrier " << l.name() << ", connectives "
            << h.description() << "\n\n";
  std::cout << pad("", label_width) << "  ";
  for (std::size_t j = 0; j < n; ++j) {
    std::cout << pad(l.format(l.element(j)), width[j]) << (j + 1 < n ? "  " : "");
  }
  std::cout << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::cout << pad(l.format(l.element(i)), label_width) << "  ";
    for (std::size_t j = 0; j < n; ++j) {
      std::cout << pad(cells[i * n + j], width[j]) << (j + 1 < n ? "  " : "");
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "Interval-valued lattice connectives: verify the algebraic laws, "
      "evaluate expressions, print hyperoperation tables."};
  app.require_subcommand(1);

  auto add_common = [&opt](CLI::App* sub, bool with_sampling) {
    sub->add_option("--carrier", opt.carrier,
                    "carrier: unit, chain:N, bool:N, or a path to a lattice "
                    "document")
        ->capture_default_str();
    auto* pair_opt =
        sub->add_option("--pair", opt.pair,
                        "connective pair: meet-join, lukasiewicz, product, "
                        "drastic, or a name defined in the lattice document "
                        "(default: meet-join)");
    sub->add_option("--quad", opt.quad,
                    "generalized quadruple 'outer,inner' of pair names")
        ->excludes(pair_opt);
    sub->add_option("--max-elements", opt.max_elements,
                    "cap on finite carrier size")
        ->capture_default_str();
    if (with_sampling) {
      sub->add_option("--samples", opt.samples,
                      "total probe tuples per law on sampled carriers")
          ->capture_default_str();
      sub->add_option("--seed", opt.seed, "sampler seed")->capture_default_str();
      sub->add_option("--denominator-bound", opt.denominator_bound,
                      "largest denominator drawn by the sampler")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    }
  };

  CLI::App* check = app.add_subcommand("check", "run verification suites");
  add_common(check, true);
  check
      ->add_option("--suite", opt.suite,
                   "full, lattice, connectives, duality, cond32, hyper, "
                   "superlattice, a6a8 or prop41")
      ->check(CLI::IsMember({"full", "lattice", "connectives", "duality",
                             "cond32", "hyper", "superlattice", "a6a8",
                             "prop41"}))
      ->capture_default_str();
  check->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* eval = app.add_subcommand("eval", "evaluate one expression");
  add_common(eval, true);
  eval->add_option("expression", opt.expression,
                   "for example \"hmeet(7/10, [3/10, 6/10])\"")
      ->required();

  CLI::App* table = app.add_subcommand("table", "print a hyperoperation table");
  add_common(table, false);
  table->add_option("--op", opt.op, "hmeet or hjoin")
      ->check(CLI::IsMember({"hmeet", "hjoin"}))
      ->capture_default_str();
  table->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const SampleParams params{opt.samples, opt.seed, opt.denominator_bound};
  try {
    const LoadedCarrier loaded = load_carrier(opt);
    if (check->parsed()) {
      return loaded.unit ? cmd_check(*loaded.unit, opt, params)
                         : cmd_check(*loaded.finite, opt, params);
    }
    if (eval->parsed()) {
      return loaded.unit ? cmd_eval(*loaded.unit, opt, params)
                         : cmd_eval(*loaded.finite, opt, params);
    }
    if (loaded.unit) {
      throw InfiniteCarrier(
          "the 'unit' carrier has no finite table; use chain:N for a grid "
          "discretization");
    }
    return cmd_table(*loaded.finite, opt, params);
  } catch (const hyperlat::ParseError& e) {
    std::cerr << "error: " << e.what() << " (at byte " << e.position() << ")\n";
    return 2;
  } catch (const hyperlat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.witness().empty()) {
      std::cerr << "  where ";
      bool first = true;
      for (const auto& [var, value] : e.witness()) {
        if (!first) std::cerr << ", ";
        first = false;
        std::cerr << var << " = " << value;
      }
      std::cerr << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
