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
#include <span>
#include <vector>

#include "pasim/agents.hpp"
#include "pasim/core.hpp"
#include "pasim/grid.hpp"
#include "pasim/mechanism.hpp"

namespace pasim {

struct ScenarioConfig {
  int num_agents = 3;
  enum class Mode { Scalar, Vector } mode = Mode::Scalar;
  int num_tasks = 5;                                   // vector mode
  MisalignmentMetric metric = MisalignmentMetric::L1;  // vector mode
  double theta_max = 4.0;                              // scalar-mode draw range
  CostModel cost_model = CostModel::linear();
  ProfitModel profit_model = ProfitModel::quadratic_decreasing(4.0, 1.0);
  PaymentScheme scheme = PaymentScheme::second_price_linear();
  Grid theta_grid{0.0, 4.0, 0.25};
  Grid gamma_grid{0.0, 4.0, 0.05};
  TieBreakPolicy tie_break = TieBreakPolicy::ProSocial;
  // Empty: everyone Truthful. One entry: applied to every agent. Otherwise
  // one entry per agent.
  std::vector<BehaviorPolicy> policies;
};

struct Scenario {
  ScenarioConfig config;
  std::optional<PriorityVector> principal_priority;  // vector mode
  std::vector<AgentProfile> agents;                  // ids 1..N in order
  std::uint64_t seed = 0;
};

/// One full play of the game: bids, selection, the winner's realization,
/// payment, and the resulting utilities. Non-winners are never paid; the
/// welfare below always equals principal utility plus the utility sum.
struct Outcome {
  int winner_id = 0;
  double theta_bar = 0.0;
  std::vector<Bid> bids;
  double gamma_realized = 0.0;
  std::vector<double> payments;         // by agent position
  std::vector<double> agent_utilities;  // by agent position
  double principal_utility = 0.0;
  double social_welfare = 0.0;
  // Bid resolution metadata when strategic agents are present. Multi-agent
  // strategic play is resolved by iterated best response, which goes beyond
  // the single-deviation analysis the properties are stated for.
  int strategic_rounds = 0;
  bool strategic_converged = true;
};

inline double social_welfare(double profit_value, double effort_value) {
  return profit_value - effort_value;
}

void validate_scenario(const Scenario& scenario);

/// Deterministic function of (config, seed). Scalar mode draws each initial
/// misalignment uniformly from [0, theta_max], one draw per agent in id
/// order. Vector mode draws the principal's vector first and then each
/// agent's, entries uniform in [0, 1), and derives the misalignments via the
/// configured metric.
Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

/// Plays the timeline in order: bids per policy, winner selection, the
/// winner's realization, payment, utilities. Strategic bids are resolved by
/// iterated best response from the truthful profile in ascending id order,
/// capped at 20 rounds, converged when no bid moves by more than 1e-9.
/// A Fixed policy's pinned realization is clamped to the feasible range.
Outcome run_game(const Scenario& scenario);

struct SeedResult {
  std::uint64_t seed = 0;
  Outcome outcome;
  double pi_star = 0.0;      // oracle optimum over the efficient agent
  double welfare_gap = 0.0;  // pi_star - realized welfare
};

/// Runs one seeded scenario per entry of `seeds`. Results come back in seed
/// order whatever the worker count.
std::vector<SeedResult> run_batch(const ScenarioConfig& config,
                                  std::span<const std::uint64_t> seeds, int workers = 1);

}  // namespace pasim
