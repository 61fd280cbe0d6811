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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pasim/engine.hpp"

namespace pasim {

enum class ReportFormat { Csv, Json };

struct SweepSpec {
  std::string axis;                 // scheme | cost | profit | tiebreak | gammaStep
  std::vector<std::string> values;  // parsed according to the axis
  std::string check = "ic";         // ic | ir | so | payment
};

/// Everything a command needs: the scenario family plus IO and search knobs.
/// Every field has a default; parse_config rejects unknown keys outright so
/// a typo cannot silently fall back to a default.
struct RunConfig {
  ScenarioConfig scenario;
  std::vector<std::uint64_t> seeds;    // expanded from count+base or an explicit list
  std::string out;                     // empty: stdout
  ReportFormat format = ReportFormat::Csv;
  int workers = 1;
  std::size_t budget = 10'000'000;     // counterexample evaluation cap
  std::string property = "ic";         // counterexample target
  std::string so_sampling = "seeded";  // social-optimality family: seeded | grid
  double threshold = 0.0;              // counterexample: minimum violation size
  std::optional<SweepSpec> sweep;
};

RunConfig default_config();

/// Parses and validates a JSON configuration document. Unknown keys, wrong
/// types and out-of-range values raise ConfigError naming the offending key
/// (e.g. "gammaGrid.step").
RunConfig parse_config(const std::string& json_text);

// Textual forms used both in config files and on the command line, e.g.
// "SecondPriceLinear", "ReportOnly(0,0.5)", "Power(3)",
// "QuadraticDecreasing(4,1)". Inverses of the describe() functions.
PaymentScheme parse_scheme(const std::string& text, const Grid& vcg_gamma_grid);
CostModel parse_cost(const std::string& text);
ProfitModel parse_profit(const std::string& text);
TieBreakPolicy parse_tie_break(const std::string& text);
MisalignmentMetric parse_metric(const std::string& text);
BehaviorPolicy parse_policy(const std::string& text);

}  // namespace pasim
