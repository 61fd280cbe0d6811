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

#include "pasim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <initializer_list>
#include <string>

#include <json.hpp>

namespace pasim {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

void check_keys(const json& object, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&key](const char* k) { return key == k; }) == allowed.end()) {
      throw ConfigError("unknown key: " + (path.empty() ? key : path + "." + key));
    }
  }
}

double get_real(const json& value, const std::string& path) {
  if (!value.is_number()) bad_key(path, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) bad_key(path, "must be finite");
  return v;
}

int get_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) bad_key(path, "expected an integer");
  return value.get<int>();
}

std::string get_string(const json& value, const std::string& path) {
  if (!value.is_string()) bad_key(path, "expected a string");
  return value.get<std::string>();
}

Grid parse_grid(const json& value, const std::string& path, Grid defaults) {
  if (!value.is_object()) bad_key(path, "expected an object with lo/hi/step");
  check_keys(value, path, {"lo", "hi", "step"});
  Grid grid = defaults;
  if (value.contains("lo")) grid.lo = get_real(value["lo"], path + ".lo");
  if (value.contains("hi")) grid.hi = get_real(value["hi"], path + ".hi");
  if (value.contains("step")) grid.step = get_real(value["step"], path + ".step");
  if (grid.step <= 0.0) bad_key(path + ".step", "must be > 0");
  if (grid.lo > grid.hi) bad_key(path, "lo must not exceed hi");
  return grid;
}

// Splits "Name(a,b)" into the name and its numeric arguments. A bare "Name"
// has no arguments.
struct NameArgs {
  std::string name;
  std::vector<double> args;
};

NameArgs split_name_args(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto open = s.find('(');
  if (open == std::string::npos) return {s, {}};
  if (s.back() != ')') throw ConfigError("malformed parameter list in '" + text + "'");
  NameArgs out;
  out.name = s.substr(0, open);
  std::string body = s.substr(open + 1, s.size() - open - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const std::string token = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.args.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("bad numeric parameter '" + token + "' in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void expect_args(const NameArgs& parsed, std::size_t count, const std::string& what) {
  if (parsed.args.size() != count) {
    throw ConfigError(what + " expects " + std::to_string(count) + " parameter(s), got " +
                      std::to_string(parsed.args.size()));
  }
}

std::vector<std::uint64_t> expand_seeds(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = base + i;
  return seeds;
}

}  // namespace

PaymentScheme parse_scheme(const std::string& text, const Grid& vcg_gamma_grid) {
  const NameArgs parsed = split_name_args(text);
  if (parsed.name == "SecondPriceLinear") {
    expect_args(parsed, 0, "SecondPriceLinear");
    return PaymentScheme::second_price_linear();
  }
  if (parsed.name == "ReportOnly") {
    expect_args(parsed, 2, "ReportOnly");
    return PaymentScheme::report_only(parsed.args[0], parsed.args[1]);
  }
  if (parsed.name == "RealizationOnly") {
    expect_args(parsed, 2, "RealizationOnly");
    return PaymentScheme::realization_only(parsed.args[0], parsed.args[1]);
  }
  if (parsed.name == "ClaimedEffort") {
    expect_args(parsed, 0, "ClaimedEffort");
    return PaymentScheme::claimed_effort();
  }
  if (parsed.name == "VCGStyle") {
    expect_args(parsed, 0, "VCGStyle");
    return PaymentScheme::vcg_style(vcg_gamma_grid);
  }
  throw ConfigError("unknown payment scheme '" + text +
                    "'; expected SecondPriceLinear, ReportOnly(offset,slope), "
                    "RealizationOnly(offset,slope), ClaimedEffort or VCGStyle");
}

CostModel parse_cost(const std::string& text) {
  const NameArgs parsed = split_name_args(text);
  if (parsed.name == "Linear") {
    expect_args(parsed, 0, "Linear");
    return CostModel::linear();
  }
  if (parsed.name == "Quadratic") {
    expect_args(parsed, 0, "Quadratic");
    return CostModel::quadratic();
  }
  if (parsed.name == "Power") {
    expect_args(parsed, 1, "Power");
    return CostModel::power(parsed.args[0]);
  }
  throw ConfigError("unknown cost model '" + text +
                    "'; expected Linear, Quadratic or Power(p)");
}

ProfitModel parse_profit(const std::string& text) {
  const NameArgs parsed = split_name_args(text);
  if (parsed.name == "LinearDecreasing") {
    expect_args(parsed, 2, "LinearDecreasing");
    return ProfitModel::linear_decreasing(parsed.args[0], parsed.args[1]);
  }
  if (parsed.name == "QuadraticDecreasing") {
    expect_args(parsed, 2, "QuadraticDecreasing");
    return ProfitModel::quadratic_decreasing(parsed.args[0], parsed.args[1]);
  }
  throw ConfigError("unknown profit model '" + text +
                    "'; expected LinearDecreasing(s0,a) or QuadraticDecreasing(s0,c)");
}

TieBreakPolicy parse_tie_break(const std::string& text) {
  if (text == "ProSocial") return TieBreakPolicy::ProSocial;
  if (text == "Adversarial") return TieBreakPolicy::Adversarial;
  if (text == "MaxAlignment") return TieBreakPolicy::MaxAlignment;
  if (text == "Lazy") return TieBreakPolicy::Lazy;
  throw ConfigError("unknown tie-break '" + text +
                    "'; expected ProSocial, Adversarial, MaxAlignment or Lazy");
}

MisalignmentMetric parse_metric(const std::string& text) {
  if (text == "L1") return MisalignmentMetric::L1;
  if (text == "L2") return MisalignmentMetric::L2;
  if (text == "Linf") return MisalignmentMetric::Linf;
  throw ConfigError("unknown metric '" + text + "'; expected L1, L2 or Linf");
}

BehaviorPolicy parse_policy(const std::string& text) {
  const NameArgs parsed = split_name_args(text);
  if (parsed.name == "Truthful") {
    expect_args(parsed, 0, "Truthful");
    return BehaviorPolicy::truthful();
  }
  if (parsed.name == "Strategic") {
    expect_args(parsed, 0, "Strategic");
    return BehaviorPolicy::strategic();
  }
  if (parsed.name == "Fixed") {
    if (parsed.args.size() == 1) return BehaviorPolicy::fixed(parsed.args[0]);
    if (parsed.args.size() == 2) return BehaviorPolicy::fixed(parsed.args[0], parsed.args[1]);
    throw ConfigError("Fixed expects Fixed(report) or Fixed(report,gamma)");
  }
  throw ConfigError("unknown policy '" + text +
                    "'; expected Truthful, Strategic, Fixed(report) or Fixed(report,gamma)");
}

RunConfig default_config() {
  RunConfig config;
  config.seeds = expand_seeds(1, 10);
  return config;
}

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");

  check_keys(doc, "",
             {"agents", "mode", "tasks", "metric", "thetaMax", "thetaGrid", "gammaGrid",
              "scheme", "enforceRealizationCap", "cost", "profit", "tieBreak", "policies",
              "seeds", "out", "format", "workers", "budget", "property", "soSampling",
              "threshold", "sweep"});

  RunConfig config = default_config();
  ScenarioConfig& scenario = config.scenario;

  if (doc.contains("agents")) {
    scenario.num_agents = get_int(doc["agents"], "agents");
    if (scenario.num_agents < 2) bad_key("agents", "needs at least 2");
  }
  if (doc.contains("mode")) {
    const std::string mode = get_string(doc["mode"], "mode");
    if (mode == "scalar") {
      scenario.mode = ScenarioConfig::Mode::Scalar;
    } else if (mode == "vector") {
      scenario.mode = ScenarioConfig::Mode::Vector;
    } else {
      bad_key("mode", "expected 'scalar' or 'vector'");
    }
  }
  if (doc.contains("tasks")) {
    scenario.num_tasks = get_int(doc["tasks"], "tasks");
    if (scenario.num_tasks < 1) bad_key("tasks", "needs at least 1");
  }
  if (doc.contains("metric")) scenario.metric = parse_metric(get_string(doc["metric"], "metric"));
  if (doc.contains("thetaMax")) {
    scenario.theta_max = get_real(doc["thetaMax"], "thetaMax");
    if (scenario.theta_max < 0.0) bad_key("thetaMax", "must be >= 0");
  }
  if (doc.contains("thetaGrid")) {
    scenario.theta_grid = parse_grid(doc["thetaGrid"], "thetaGrid", scenario.theta_grid);
  }
  if (doc.contains("gammaGrid")) {
    scenario.gamma_grid = parse_grid(doc["gammaGrid"], "gammaGrid", scenario.gamma_grid);
  }

  // The scheme may reference the gamma grid (VCGStyle), so grids come first.
  if (doc.contains("scheme")) {
    scenario.scheme = parse_scheme(get_string(doc["scheme"], "scheme"), scenario.gamma_grid);
  } else {
    scenario.scheme = PaymentScheme::second_price_linear();
  }
  if (doc.contains("enforceRealizationCap")) {
    if (!doc["enforceRealizationCap"].is_boolean()) {
      bad_key("enforceRealizationCap", "expected a boolean");
    }
    scenario.scheme.enforce_realization_cap = doc["enforceRealizationCap"].get<bool>();
  }
  if (doc.contains("cost")) scenario.cost_model = parse_cost(get_string(doc["cost"], "cost"));
  if (doc.contains("profit")) {
    scenario.profit_model = parse_profit(get_string(doc["profit"], "profit"));
  }
  if (doc.contains("tieBreak")) {
    scenario.tie_break = parse_tie_break(get_string(doc["tieBreak"], "tieBreak"));
  }
  if (doc.contains("policies")) {
    const json& policies = doc["policies"];
    if (policies.is_string()) {
      scenario.policies = {parse_policy(policies.get<std::string>())};
    } else if (policies.is_array()) {
      for (const auto& entry : policies) {
        scenario.policies.push_back(parse_policy(get_string(entry, "policies[]")));
      }
    } else {
      bad_key("policies", "expected a string or an array of strings");
    }
  }

  if (doc.contains("seeds")) {
    const json& seeds = doc["seeds"];
    if (!seeds.is_object()) bad_key("seeds", "expected an object with count/base or list");
    check_keys(seeds, "seeds", {"count", "base", "list"});
    if (seeds.contains("list")) {
      if (seeds.contains("count") || seeds.contains("base")) {
        bad_key("seeds", "list excludes count/base");
      }
      if (!seeds["list"].is_array()) bad_key("seeds.list", "expected an array");
      config.seeds.clear();
      for (const auto& entry : seeds["list"]) {
        if (!entry.is_number_unsigned() && !entry.is_number_integer()) {
          bad_key("seeds.list", "entries must be nonnegative integers");
        }
        const auto v = entry.get<std::int64_t>();
        if (v < 0) bad_key("seeds.list", "entries must be nonnegative integers");
        config.seeds.push_back(static_cast<std::uint64_t>(v));
      }
    } else {
      std::uint64_t base = 1;
      std::size_t count = config.seeds.size();
      if (seeds.contains("base")) {
        const int b = get_int(seeds["base"], "seeds.base");
        if (b < 0) bad_key("seeds.base", "must be >= 0");
        base = static_cast<std::uint64_t>(b);
      }
      if (seeds.contains("count")) {
        const int c = get_int(seeds["count"], "seeds.count");
        if (c < 0) bad_key("seeds.count", "must be >= 0");
        count = static_cast<std::size_t>(c);
      }
      config.seeds = expand_seeds(base, count);
    }
  }

  if (doc.contains("out")) config.out = get_string(doc["out"], "out");
  if (doc.contains("format")) {
    const std::string format = get_string(doc["format"], "format");
    if (format == "csv") {
      config.format = ReportFormat::Csv;
    } else if (format == "json") {
      config.format = ReportFormat::Json;
    } else {
      bad_key("format", "expected 'csv' or 'json'");
    }
  }
  if (doc.contains("workers")) {
    config.workers = get_int(doc["workers"], "workers");
    if (config.workers < 1) bad_key("workers", "must be >= 1");
  }
  if (doc.contains("budget")) {
    const auto budget = get_int(doc["budget"], "budget");
    if (budget < 1) bad_key("budget", "must be >= 1");
    config.budget = static_cast<std::size_t>(budget);
  }
  if (doc.contains("property")) config.property = get_string(doc["property"], "property");
  if (doc.contains("soSampling")) {
    config.so_sampling = get_string(doc["soSampling"], "soSampling");
    if (config.so_sampling != "seeded" && config.so_sampling != "grid") {
      bad_key("soSampling", "expected 'seeded' or 'grid'");
    }
  }
  if (doc.contains("threshold")) {
    config.threshold = get_real(doc["threshold"], "threshold");
    if (config.threshold < 0.0) bad_key("threshold", "must be >= 0");
  }
  if (doc.contains("sweep")) {
    const json& sweep = doc["sweep"];
    if (!sweep.is_object()) bad_key("sweep", "expected an object");
    check_keys(sweep, "sweep", {"axis", "values", "check"});
    SweepSpec spec;
    if (!sweep.contains("axis")) bad_key("sweep.axis", "is required");
    spec.axis = get_string(sweep["axis"], "sweep.axis");
    if (!sweep.contains("values") || !sweep["values"].is_array() || sweep["values"].empty()) {
      bad_key("sweep.values", "expected a non-empty array");
    }
    for (const auto& entry : sweep["values"]) {
      if (entry.is_string()) {
        spec.values.push_back(entry.get<std::string>());
      } else if (entry.is_number()) {
        spec.values.push_back(entry.dump());
      } else {
        bad_key("sweep.values", "entries must be strings or numbers");
      }
    }
    if (sweep.contains("check")) spec.check = get_string(sweep["check"], "sweep.check");
    if (spec.check != "ic" && spec.check != "ir" && spec.check != "so" &&
        spec.check != "payment") {
      bad_key("sweep.check", "expected ic, ir, so or payment");
    }
    config.sweep = std::move(spec);
  }

  return config;
}

}  // namespace pasim
