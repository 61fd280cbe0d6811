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
#include "pasim/grid.hpp"
#include "pasim/oracles.hpp"

namespace pasim {

// Every check below is grid-exhaustive over its declared family, never
// sampled: a pass is a certificate relative to the grids embedded in the
// report, and every violation found is recorded in enumeration order.

/// Margin a deviation must clear to count as strictly profitable; also the
/// welfare-gap and payment-condition tolerance.
inline constexpr double kGainTolerance = 1e-9;
/// Slack on utilities that must be nonnegative.
inline constexpr double kUtilityTolerance = 1e-12;

enum class Property {
  IncentiveCompatibility,
  IndividualRationality,
  SocialOptimality,
  PaymentProperty,
  SelectionEfficiency,
};

std::string to_string(Property property);

/// One concrete violation. Which fields are set depends on the property;
/// the README documents the per-property meaning of baseline/observed/gain.
struct Witness {
  std::vector<double> thetas;  // true types of the scenario (or the swept winner type)
  std::optional<std::uint64_t> seed;
  std::optional<int> agent_id;
  std::optional<int> expected_agent_id;  // selection efficiency: the welfare-right agent
  std::optional<double> misreport;
  std::optional<double> theta_bar;
  std::optional<double> gamma;
  std::optional<double> gamma_star;
  std::optional<double> payment;
  std::optional<double> baseline;  // truthful utility / optimal welfare
  std::optional<double> observed;  // deviation utility / realized welfare / utility
  double gain = 0.0;               // improvement, gap, or margin that is the violation
  std::optional<int> condition;    // payment-property condition index
};

/// How scenario true types are enumerated: every assignment of theta-grid
/// points to the agent positions, or one uniform draw per seed.
struct ScenarioFamily {
  ScenarioConfig config;
  enum class Sampling { GridExhaustive, Seeded } sampling = Sampling::GridExhaustive;
  std::vector<std::uint64_t> seeds;  // Seeded only

  static ScenarioFamily grid(ScenarioConfig config);
  static ScenarioFamily seeded(ScenarioConfig config, std::vector<std::uint64_t> seeds);
  std::size_t scenario_count() const;
};

struct VerificationReport {
  Property property{};
  bool passed = false;
  double tolerance = 0.0;
  std::size_t scenarios_checked = 0;
  std::string sampling;  // "grid" or "seeded"
  Grid theta_grid;
  Grid gamma_grid;
  std::string scheme;
  std::string cost_model;
  std::string profit_model;
  std::string tie_break;
  std::vector<Witness> counterexamples;
  // Individual rationality only: the principal-side reading. Reported but
  // never folded into `passed` -- no guarantee is claimed for it.
  bool principal_ir_holds = true;
  std::vector<Witness> principal_counterexamples;
};

/// For every scenario in the family and every agent position, scores every
/// grid misreport against the truthful report with the other bids held
/// truthful (losing scores zero, winning scores the best-realization
/// utility). A violation is a deviation more than kGainTolerance above
/// truthful.
VerificationReport check_incentive_compatibility(const ScenarioFamily& family,
                                                 int workers = 1);

/// Truthful play. The agent side is certified across every feasible
/// realization of the winner: no feasible realization may leave the winner
/// below -kUtilityTolerance, and losers earn exactly zero. The principal
/// side is evaluated at the realized outcome (the winner's actual pick) and
/// reported separately as principal_* without affecting `passed`.
VerificationReport check_individual_rationality(const ScenarioFamily& family,
                                                int workers = 1);

/// Plays each scenario and compares the realized welfare against the oracle
/// optimum of the welfare-best agent; a gap beyond kGainTolerance is a
/// violation.
VerificationReport check_social_optimality(const ScenarioFamily& family,
                                           int workers = 1);

/// Checks that the auction's winner is the agent the welfare oracle would
/// pick, on every scenario in the family (ties resolve to the lowest
/// id/position on both sides).
VerificationReport check_selection_efficiency(const ScenarioFamily& family,
                                              int workers = 1);

struct SearchBudget {
  std::size_t max_evaluations = 10'000'000;
};

struct SearchResult {
  std::optional<Witness> witness;
  // True when the answer is final: a witness was found, or the whole space
  // was covered without one. False means the budget ran out first --
  // reported as inconclusive, never as a pass.
  bool conclusive = false;
  std::size_t evaluations = 0;
};

/// First violation of `property` in deterministic enumeration order, if one
/// exists within the evaluation budget. `threshold` raises the bar for what
/// counts (e.g. only welfare gaps above 0.1); zero means the property's own
/// tolerance. PaymentProperty enumerates (winner type, second bid) cells of
/// the family's grids; the other properties enumerate the family itself.
SearchResult search_counterexample(Property property, const ScenarioFamily& family,
                                   SearchBudget budget = {}, double threshold = 0.0);

}  // namespace pasim
