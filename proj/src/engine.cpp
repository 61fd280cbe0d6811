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

#include "pasim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pasim/oracles.hpp"
#include "pasim/parallel.hpp"
#include "pasim/rng.hpp"

namespace pasim {

namespace {

constexpr int kMaxBestResponseRounds = 20;
constexpr double kBidFixedPointTolerance = 1e-9;

BehaviorPolicy policy_for(const ScenarioConfig& config, int position) {
  if (config.policies.empty()) return BehaviorPolicy::truthful();
  if (config.policies.size() == 1) return config.policies.front();
  return config.policies.at(static_cast<std::size_t>(position));
}

void validate_config(const ScenarioConfig& config) {
  if (config.num_agents < 2) {
    throw ValidationError("scenario needs at least two agents");
  }
  if (!std::isfinite(config.theta_max) || config.theta_max < 0.0) {
    throw ValidationError("theta_max must be finite and nonnegative");
  }
  if (config.mode == ScenarioConfig::Mode::Vector && config.num_tasks < 1) {
    throw ValidationError("vector mode needs at least one task");
  }
  if (!config.policies.empty() && config.policies.size() != 1 &&
      config.policies.size() != static_cast<std::size_t>(config.num_agents)) {
    throw ValidationError("policies must be empty, a single entry, or one per agent");
  }
  validate_grid(config.theta_grid, "theta grid");
  validate_grid(config.gamma_grid, "gamma grid");
}

std::vector<Bid> resolve_bids(const Scenario& scenario, int& rounds_out, bool& converged_out) {
  const ScenarioConfig& cfg = scenario.config;
  const auto n = scenario.agents.size();

  std::vector<Bid> bids(n);
  std::vector<bool> strategic(n, false);
  bool any_strategic = false;
  for (std::size_t i = 0; i < n; ++i) {
    const AgentProfile& agent = scenario.agents[i];
    switch (agent.policy.kind) {
      case PolicyKind::Truthful:
        bids[i] = {agent.id, agent.true_theta};
        break;
      case PolicyKind::Strategic:
        // Iteration starts from the truthful profile.
        bids[i] = {agent.id, agent.true_theta};
        strategic[i] = true;
        any_strategic = true;
        break;
      case PolicyKind::Fixed:
        validate_bid({agent.id, agent.policy.fixed_report});
        bids[i] = {agent.id, agent.policy.fixed_report};
        break;
    }
  }

  rounds_out = 0;
  converged_out = true;
  if (!any_strategic) return bids;

  std::vector<Bid> others(n - 1);
  for (int round = 0; round < kMaxBestResponseRounds; ++round) {
    double max_move = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!strategic[i]) continue;
      others.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) others.push_back(bids[j]);
      }
      const BidChoice choice =
          best_response_bid(scenario.agents[i], others, cfg.scheme, cfg.cost_model,
                            cfg.profit_model, cfg.theta_grid, cfg.gamma_grid, cfg.tie_break);
      max_move = std::max(max_move, std::abs(choice.reported_theta - bids[i].reported_theta));
      bids[i].reported_theta = choice.reported_theta;
    }
    ++rounds_out;
    if (max_move <= kBidFixedPointTolerance) return bids;
  }
  converged_out = false;
  return bids;
}

}  // namespace

void validate_scenario(const Scenario& scenario) {
  validate_config(scenario.config);
  if (scenario.agents.size() != static_cast<std::size_t>(scenario.config.num_agents)) {
    throw ValidationError("scenario agent list does not match the configured count");
  }
  std::size_t expected_tasks = 0;
  if (scenario.principal_priority) expected_tasks = scenario.principal_priority->size();
  for (std::size_t i = 0; i < scenario.agents.size(); ++i) {
    const AgentProfile& agent = scenario.agents[i];
    if (agent.id != static_cast<int>(i) + 1) {
      throw ValidationError("agent ids must be 1..N in order");
    }
    if (!std::isfinite(agent.true_theta) || agent.true_theta < 0.0) {
      throw ValidationError("agent " + std::to_string(agent.id) +
                            " has an invalid initial misalignment");
    }
    if (agent.true_priority) {
      if (expected_tasks == 0) expected_tasks = agent.true_priority->size();
      if (agent.true_priority->size() != expected_tasks) {
        throw DimensionError("all priority vectors in a scenario must share one length");
      }
    }
  }
}

Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  validate_config(config);
  SplitMix64 rng(seed);

  Scenario scenario;
  scenario.config = config;
  scenario.seed = seed;
  scenario.agents.reserve(static_cast<std::size_t>(config.num_agents));

  if (config.mode == ScenarioConfig::Mode::Scalar) {
    for (int i = 0; i < config.num_agents; ++i) {
      AgentProfile agent;
      agent.id = i + 1;
      agent.true_theta = rng.next_double() * config.theta_max;
      agent.policy = policy_for(config, i);
      scenario.agents.push_back(std::move(agent));
    }
  } else {
    const auto tasks = static_cast<std::size_t>(config.num_tasks);
    std::vector<double> entries(tasks);
    for (auto& e : entries) e = rng.next_double();
    scenario.principal_priority = PriorityVector(entries);
    for (int i = 0; i < config.num_agents; ++i) {
      for (auto& e : entries) e = rng.next_double();
      AgentProfile agent = make_vector_agent(i + 1, config.metric, *scenario.principal_priority,
                                             PriorityVector(entries), policy_for(config, i));
      scenario.agents.push_back(std::move(agent));
    }
  }
  return scenario;
}

Outcome run_game(const Scenario& scenario) {
  validate_scenario(scenario);
  const ScenarioConfig& cfg = scenario.config;

  Outcome outcome;
  outcome.bids = resolve_bids(scenario, outcome.strategic_rounds, outcome.strategic_converged);

  const Selection sel = select_winner(outcome.bids);
  outcome.winner_id = sel.winner_id;
  outcome.theta_bar = sel.theta_bar;

  const auto winner_pos = static_cast<std::size_t>(sel.winner_id - 1);
  const AgentProfile& winner = scenario.agents[winner_pos];
  const double reported = outcome.bids[winner_pos].reported_theta;

  if (winner.policy.kind == PolicyKind::Fixed && winner.policy.fixed_gamma) {
    // A pinned realization is clamped into the feasible range instead of
    // trusting the configuration.
    outcome.gamma_realized =
        std::clamp(*winner.policy.fixed_gamma, 0.0, std::min(winner.true_theta, reported));
  } else {
    outcome.gamma_realized =
        best_realization(winner.true_theta, reported, sel.theta_bar, cfg.scheme,
                         cfg.cost_model, cfg.profit_model, cfg.gamma_grid, cfg.tie_break)
            .gamma;
  }

  const double payment = compute_payment(cfg.scheme, sel.theta_bar, outcome.gamma_realized,
                                         reported, cfg.cost_model, &cfg.profit_model);
  const double effort = effort_cost(cfg.cost_model, winner.true_theta, outcome.gamma_realized);
  const double profit_value = profit(cfg.profit_model, outcome.gamma_realized);

  outcome.payments.assign(scenario.agents.size(), 0.0);
  outcome.agent_utilities.assign(scenario.agents.size(), 0.0);
  outcome.payments[winner_pos] = payment;
  outcome.agent_utilities[winner_pos] = payment - effort;
  outcome.principal_utility = profit_value - payment;
  outcome.social_welfare = social_welfare(profit_value, effort);
  return outcome;
}

std::vector<SeedResult> run_batch(const ScenarioConfig& config,
                                  std::span<const std::uint64_t> seeds, int workers) {
  validate_config(config);
  return parallel_collect<SeedResult>(
      seeds.size(), workers, [&](std::size_t begin, std::size_t end) {
        std::vector<SeedResult> rows;
        rows.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
          SeedResult row;
          row.seed = seeds[i];
          const Scenario scenario = generate_scenario(config, seeds[i]);
          row.outcome = run_game(scenario);

          std::vector<double> thetas;
          thetas.reserve(scenario.agents.size());
          for (const AgentProfile& agent : scenario.agents) {
            thetas.push_back(agent.true_theta);
          }
          const int efficient = efficient_agent_oracle(thetas, config.profit_model,
                                                       config.cost_model, config.gamma_grid);
          row.pi_star = social_optimum_oracle(thetas[static_cast<std::size_t>(efficient - 1)],
                                              config.profit_model, config.cost_model,
                                              config.gamma_grid)
                            .pi_star;
          row.welfare_gap = row.pi_star - row.outcome.social_welfare;
          rows.push_back(std::move(row));
        }
        return rows;
      });
}

}  // namespace pasim
