// Copyright 2026 The pasim Authors.
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

#include "pasim/runner.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pasim/config.hpp"
#include "pasim/report.hpp"
#include "pasim/verify.hpp"

namespace pasim {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct CliOverrides {
  std::string config_path;
  std::optional<int> seeds_count;
  std::optional<std::string> seed_list;
  std::optional<std::string> scheme;
  std::optional<std::string> cost;
  std::optional<std::string> profit;
  std::optional<std::string> tiebreak;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> property;
  std::optional<std::string> sampling;
  std::optional<int> workers;
  std::optional<std::size_t> budget;
  std::optional<double> threshold;
};

RunConfig load_config(const CliOverrides& overrides) {
  RunConfig config;
  if (!overrides.config_path.empty()) {
    std::ifstream in(overrides.config_path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + overrides.config_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    config = parse_config(text.str());
  } else {
    config = default_config();
  }

  if (overrides.seeds_count) {
    if (*overrides.seeds_count < 0) throw ConfigError("--seeds must be >= 0");
    config.seeds.clear();
    for (int i = 0; i < *overrides.seeds_count; ++i) {
      config.seeds.push_back(static_cast<std::uint64_t>(i) + 1);
    }
  }
  if (overrides.seed_list) {
    config.seeds.clear();
    std::stringstream list(*overrides.seed_list);
    std::string token;
    while (std::getline(list, token, ',')) {
      try {
        config.seeds.push_back(std::stoull(token));
      } catch (const std::exception&) {
        throw ConfigError("bad seed '" + token + "' in --seed-list");
      }
    }
  }
  if (overrides.scheme) {
    config.scenario.scheme = parse_scheme(*overrides.scheme, config.scenario.gamma_grid);
  }
  if (overrides.cost) config.scenario.cost_model = parse_cost(*overrides.cost);
  if (overrides.profit) config.scenario.profit_model = parse_profit(*overrides.profit);
  if (overrides.tiebreak) config.scenario.tie_break = parse_tie_break(*overrides.tiebreak);
  if (overrides.out) config.out = *overrides.out;
  if (overrides.format) {
    if (*overrides.format == "csv") {
      config.format = ReportFormat::Csv;
    } else if (*overrides.format == "json") {
      config.format = ReportFormat::Json;
    } else {
      throw ConfigError("--format expects csv or json");
    }
  }
  if (overrides.property) config.property = *overrides.property;
  if (overrides.sampling) {
    if (*overrides.sampling != "seeded" && *overrides.sampling != "grid") {
      throw ConfigError("--sampling expects seeded or grid");
    }
    config.so_sampling = *overrides.sampling;
  }
  if (overrides.workers) {
    if (*overrides.workers < 1) throw ConfigError("--workers must be >= 1");
    config.workers = *overrides.workers;
  }
  if (overrides.budget) config.budget = *overrides.budget;
  if (overrides.threshold) {
    if (*overrides.threshold < 0.0) throw ConfigError("--threshold must be >= 0");
    config.threshold = *overrides.threshold;
  }
  return config;
}

void emit(const RunConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(config.out, text);
  }
}

Property parse_property(const std::string& name) {
  if (name == "ic") return Property::IncentiveCompatibility;
  if (name == "ir") return Property::IndividualRationality;
  if (name == "so") return Property::SocialOptimality;
  if (name == "payment") return Property::PaymentProperty;
  if (name == "selection") return Property::SelectionEfficiency;
  throw ConfigError("unknown property '" + name +
                    "'; expected ic, ir, so, payment or selection");
}

ScenarioFamily family_for(const RunConfig& config, Property property) {
  // Deviation and rationality checks sweep the theta grid exhaustively;
  // welfare checks default to the seeded batch but can be forced onto the
  // grid via soSampling/--sampling.
  const bool seeded = (property == Property::SocialOptimality ||
                       property == Property::SelectionEfficiency) &&
                      config.so_sampling == "seeded";
  if (seeded) return ScenarioFamily::seeded(config.scenario, config.seeds);
  return ScenarioFamily::grid(config.scenario);
}

int cmd_run(const RunConfig& config) {
  const std::vector<SeedResult> rows = run_batch(config.scenario, config.seeds, config.workers);
  emit(config, config.format == ReportFormat::Csv ? outcome_csv(rows) : outcome_json(rows));
  if (!config.out.empty()) {
    std::cout << "run: wrote " << rows.size() << " outcome row(s) to " << config.out << "\n";
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& config, const std::string& property_name) {
  const Property property = parse_property(property_name);
  const ScenarioFamily family = family_for(config, property);

  VerificationReport report;
  switch (property) {
    case Property::IncentiveCompatibility:
      report = check_incentive_compatibility(family, config.workers);
      break;
    case Property::IndividualRationality:
      report = check_individual_rationality(family, config.workers);
      break;
    case Property::SocialOptimality:
      report = check_social_optimality(family, config.workers);
      break;
    case Property::SelectionEfficiency:
      report = check_selection_efficiency(family, config.workers);
      break;
    case Property::PaymentProperty:
      throw ConfigError("use the payment-check command for the payment property");
  }

  emit(config, config.format == ReportFormat::Csv ? verification_csv(report)
                                                  : verification_json(report));
  std::cout << to_string(report.property) << ": " << (report.passed ? "PASS" : "FAIL") << " ("
            << report.scenarios_checked << " scenarios, " << report.counterexamples.size()
            << " counterexample(s))\n";
  if (report.property == Property::IndividualRationality && !report.principal_ir_holds) {
    std::cout << "note: principal-side rationality has " << report.principal_counterexamples.size()
              << " violation(s); reported separately, not part of the pass criterion\n";
  }
  return report.passed ? kExitPass : kExitPropertyFailed;
}

int cmd_payment_check(const RunConfig& config) {
  const ScenarioConfig& s = config.scenario;
  const PaymentPropertyReport report = check_payment_property(
      s.scheme, s.cost_model, s.theta_grid, s.gamma_grid, &s.profit_model);
  emit(config, config.format == ReportFormat::Csv ? payment_report_csv(report)
                                                  : payment_report_json(report));
  std::cout << "payment-check " << describe(s.scheme) << ": "
            << (report.passed() ? "PASS" : "FAIL") << " (condition1="
            << (report.condition1_holds ? "holds" : "fails") << ", condition2="
            << (report.condition2_holds ? "holds" : "fails") << ", "
            << report.violations.size() << " violation(s))\n";
  return report.passed() ? kExitPass : kExitPropertyFailed;
}

int cmd_counterexample(const RunConfig& config) {
  const Property property = parse_property(config.property);
  const ScenarioFamily family = family_for(config, property);
  const SearchResult result =
      search_counterexample(property, family, SearchBudget{config.budget}, config.threshold);

  emit(config, search_result_json(result, property));
  if (result.witness) {
    std::cout << "counterexample " << to_string(property) << ": found after "
              << result.evaluations << " evaluation(s)\n";
    return kExitPropertyFailed;
  }
  if (result.conclusive) {
    std::cout << "counterexample " << to_string(property)
              << ": none, full space covered\n";
    return kExitPass;
  }
  std::cout << "counterexample " << to_string(property)
            << ": inconclusive, budget of " << config.budget
            << " evaluation(s) exhausted before full coverage\n";
  return kExitInconclusive;
}

int cmd_sweep(const RunConfig& config) {
  if (!config.sweep) throw ConfigError("sweep needs a 'sweep' section in the config");
  const SweepSpec& spec = *config.sweep;

  std::ostringstream out;
  out << "axis,value,check,passed,counterexamples,worst_gain\n";
  bool all_passed = true;

  for (const std::string& value : spec.values) {
    RunConfig point = config;
    if (spec.axis == "scheme") {
      point.scenario.scheme = parse_scheme(value, point.scenario.gamma_grid);
    } else if (spec.axis == "cost") {
      point.scenario.cost_model = parse_cost(value);
    } else if (spec.axis == "profit") {
      point.scenario.profit_model = parse_profit(value);
    } else if (spec.axis == "tiebreak") {
      point.scenario.tie_break = parse_tie_break(value);
    } else if (spec.axis == "gammaStep") {
      double step = 0.0;
      try {
        step = std::stod(value);
      } catch (const std::exception&) {
        throw ConfigError("sweep.values: bad gammaStep '" + value + "'");
      }
      if (step <= 0.0) throw ConfigError("sweep.values: gammaStep must be > 0");
      point.scenario.gamma_grid.step = step;
    } else {
      throw ConfigError("unknown sweep axis '" + spec.axis +
                        "'; expected scheme, cost, profit, tiebreak or gammaStep");
    }

    bool passed = false;
    std::size_t counterexamples = 0;
    double worst_gain = 0.0;
    if (spec.check == "payment") {
      const ScenarioConfig& s = point.scenario;
      const PaymentPropertyReport report = check_payment_property(
          s.scheme, s.cost_model, s.theta_grid, s.gamma_grid, &s.profit_model);
      passed = report.passed();
      counterexamples = report.violations.size();
      for (const auto& violation : report.violations) {
        worst_gain = std::max(worst_gain, std::abs(violation.margin));
      }
    } else {
      const Property property = parse_property(spec.check);
      const ScenarioFamily family = family_for(point, property);
      VerificationReport report;
      if (property == Property::IncentiveCompatibility) {
        report = check_incentive_compatibility(family, point.workers);
      } else if (property == Property::IndividualRationality) {
        report = check_individual_rationality(family, point.workers);
      } else {
        report = check_social_optimality(family, point.workers);
      }
      passed = report.passed;
      counterexamples = report.counterexamples.size();
      for (const auto& witness : report.counterexamples) {
        worst_gain = std::max(worst_gain, std::abs(witness.gain));
      }
    }
    all_passed = all_passed && passed;
    out << spec.axis << ',' << value << ',' << spec.check << ','
        << (passed ? "true" : "false") << ',' << counterexamples << ','
        << format_real(worst_gain) << '\n';
  }

  emit(config, out.str());
  std::cout << "sweep over " << spec.axis << ": " << (all_passed ? "all points PASS" : "some points FAIL")
            << "\n";
  return all_passed ? kExitPass : kExitPropertyFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"Two-stage task-allocation auction: simulator, payment schemes and "
               "exhaustive property checkers"};
  app.name("pasim");

  CliOverrides overrides;
  app.add_option("--config", overrides.config_path, "JSON configuration file");
  app.add_option("--seeds", overrides.seeds_count, "use seeds 1..N");
  app.add_option("--seed-list", overrides.seed_list, "comma-separated explicit seeds");
  app.add_option("--scheme", overrides.scheme,
                 "payment scheme, e.g. SecondPriceLinear or ReportOnly(0,0.5)");
  app.add_option("--cost", overrides.cost, "cost model: Linear, Quadratic or Power(p)");
  app.add_option("--profit", overrides.profit,
                 "profit model, e.g. QuadraticDecreasing(4,1)");
  app.add_option("--tiebreak", overrides.tiebreak,
                 "ProSocial, Adversarial, MaxAlignment or Lazy");
  app.add_option("--out", overrides.out, "output file (default: stdout)");
  app.add_option("--format", overrides.format, "csv or json");
  app.add_option("--workers", overrides.workers, "parallel workers (output is identical)");
  app.add_option("--budget", overrides.budget, "counterexample evaluation budget");
  app.add_option("--property", overrides.property,
                 "counterexample target: ic, ir, so, payment or selection");
  app.add_option("--threshold", overrides.threshold,
                 "minimum violation size for counterexample search");
  app.add_option("--sampling", overrides.sampling,
                 "scenario family for so/selection: seeded or grid");

  auto* run = app.add_subcommand("run", "simulate one outcome per seed");
  auto* verify = app.add_subcommand("verify", "check a property exhaustively");
  std::string verify_property;
  verify->add_option("property", verify_property, "ic, ir, so or selection")->required();
  auto* payment = app.add_subcommand("payment-check", "check the two payment conditions");
  auto* counter = app.add_subcommand("counterexample", "search for the first violation");
  auto* sweep = app.add_subcommand("sweep", "re-run a check along one parameter axis");
  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("pasim");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const RunConfig config = load_config(overrides);
    if (run->parsed()) return cmd_run(config);
    if (verify->parsed()) return cmd_verify(config, verify_property);
    if (payment->parsed()) return cmd_payment_check(config);
    if (counter->parsed()) return cmd_counterexample(config);
    if (sweep->parsed()) return cmd_sweep(config);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pasim
