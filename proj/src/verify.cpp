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

#include "pasim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "pasim/parallel.hpp"

namespace pasim {

std::string to_string(Property property) {
  switch (property) {
    case Property::IncentiveCompatibility: return "ic";
    case Property::IndividualRationality: return "ir";
    case Property::SocialOptimality: return "so";
    case Property::PaymentProperty: return "payment";
    case Property::SelectionEfficiency: return "selection";
  }
  return "ic";
}

ScenarioFamily ScenarioFamily::grid(ScenarioConfig config) {
  ScenarioFamily family;
  family.config = std::move(config);
  family.sampling = Sampling::GridExhaustive;
  return family;
}

ScenarioFamily ScenarioFamily::seeded(ScenarioConfig config, std::vector<std::uint64_t> seeds) {
  ScenarioFamily family;
  family.config = std::move(config);
  family.sampling = Sampling::Seeded;
  family.seeds = std::move(seeds);
  return family;
}

std::size_t ScenarioFamily::scenario_count() const {
  if (sampling == Sampling::Seeded) return seeds.size();
  const std::size_t points = config.theta_grid.point_count();
  std::size_t total = 1;
  for (int i = 0; i < config.num_agents; ++i) {
    if (total > 200'000'000 / points) {
      throw ConfigError("grid-exhaustive family is too large; shrink the theta grid "
                        "or the number of agents");
    }
    total *= points;
  }
  return total;
}

namespace {

struct FamilyContext {
  const ScenarioFamily* family = nullptr;
  std::vector<double> theta_points;
  std::size_t total = 0;

  const ScenarioConfig& config() const { return family->config; }
};

FamilyContext make_context(const ScenarioFamily& family) {
  if (family.sampling == ScenarioFamily::Sampling::Seeded && family.seeds.empty()) {
    throw ConfigError("seeded family has no seeds");
  }
  FamilyContext ctx;
  ctx.family = &family;
  ctx.theta_points = family.config.theta_grid.points();
  ctx.total = family.scenario_count();
  return ctx;
}

// True types of scenario `index`: grid families decode the index as an
// odometer over the theta grid (last agent fastest), seeded families draw
// them the same way generate_scenario does.
std::vector<double> scenario_thetas(const FamilyContext& ctx, std::size_t index) {
  const ScenarioConfig& cfg = ctx.config();
  const auto n = static_cast<std::size_t>(cfg.num_agents);
  std::vector<double> thetas(n);
  if (ctx.family->sampling == ScenarioFamily::Sampling::Seeded) {
    const Scenario scenario = generate_scenario(cfg, ctx.family->seeds[index]);
    for (std::size_t i = 0; i < n; ++i) thetas[i] = scenario.agents[i].true_theta;
    return thetas;
  }
  const std::size_t base = ctx.theta_points.size();
  for (std::size_t i = n; i-- > 0;) {
    thetas[i] = ctx.theta_points[index % base];
    index /= base;
  }
  return thetas;
}

std::optional<std::uint64_t> scenario_seed(const FamilyContext& ctx, std::size_t index) {
  if (ctx.family->sampling == ScenarioFamily::Sampling::Seeded) {
    return ctx.family->seeds[index];
  }
  return std::nullopt;
}

std::vector<Bid> truthful_bids(std::span<const double> thetas) {
  std::vector<Bid> bids(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    bids[i] = {static_cast<int>(i) + 1, thetas[i]};
  }
  return bids;
}

struct PlayResult {
  bool wins = false;
  double theta_bar = 0.0;
  double utility = 0.0;
  double gamma = 0.0;
  double payment = 0.0;
};

// Utility of the agent at `agent_pos` when it reports `report` and everyone
// else bids truthfully. Losing earns exactly zero.
PlayResult play_candidate(const ScenarioConfig& cfg, std::span<const double> thetas,
                          std::size_t agent_pos, double report) {
  std::vector<Bid> bids = truthful_bids(thetas);
  bids[agent_pos].reported_theta = report;
  const Selection sel = select_winner(bids);

  PlayResult result;
  result.theta_bar = sel.theta_bar;
  if (sel.winner_id != static_cast<int>(agent_pos) + 1) return result;

  result.wins = true;
  const RealizationChoice choice =
      best_realization(thetas[agent_pos], report, sel.theta_bar, cfg.scheme, cfg.cost_model,
                       cfg.profit_model, cfg.gamma_grid, cfg.tie_break);
  result.gamma = choice.gamma;
  result.utility = choice.utility;
  result.payment = compute_payment(cfg.scheme, sel.theta_bar, choice.gamma, report,
                                   cfg.cost_model, &cfg.profit_model);
  return result;
}

void fill_family_fields(VerificationReport& report, const FamilyContext& ctx) {
  const ScenarioConfig& cfg = ctx.config();
  report.scenarios_checked = ctx.total;
  report.sampling =
      ctx.family->sampling == ScenarioFamily::Sampling::Seeded ? "seeded" : "grid";
  report.theta_grid = cfg.theta_grid;
  report.gamma_grid = cfg.gamma_grid;
  report.scheme = describe(cfg.scheme);
  report.cost_model = describe(cfg.cost_model);
  report.profit_model = describe(cfg.profit_model);
  report.tie_break = to_string(cfg.tie_break);
}

std::optional<Witness> ic_violation(const FamilyContext& ctx, std::size_t index,
                                    std::size_t agent_pos, double report,
                                    double truthful_utility, double threshold) {
  const std::vector<double> thetas = scenario_thetas(ctx, index);
  const PlayResult dev = play_candidate(ctx.config(), thetas, agent_pos, report);
  const double gain = dev.utility - truthful_utility;
  if (gain <= threshold) return std::nullopt;

  Witness w;
  w.thetas = thetas;
  w.seed = scenario_seed(ctx, index);
  w.agent_id = static_cast<int>(agent_pos) + 1;
  w.misreport = report;
  w.theta_bar = dev.theta_bar;
  w.gamma = dev.gamma;
  w.payment = dev.payment;
  w.baseline = truthful_utility;
  w.observed = dev.utility;
  w.gain = gain;
  return w;
}

struct IrScan {
  std::vector<Witness> agent;
  std::vector<Witness> principal;
};

// One scenario of the individual-rationality check: the winner's utility is
// certified for every feasible realization (the scheme must never force a
// loss), the principal's utility is taken at the realized outcome.
IrScan ir_scan(const FamilyContext& ctx, std::size_t index, double threshold) {
  const ScenarioConfig& cfg = ctx.config();
  const std::vector<double> thetas = scenario_thetas(ctx, index);
  const std::vector<Bid> bids = truthful_bids(thetas);
  const Selection sel = select_winner(bids);
  const double winner_theta = thetas[static_cast<std::size_t>(sel.winner_id - 1)];

  IrScan scan;
  for (double gamma : feasible_gammas(cfg.gamma_grid, winner_theta)) {
    const double pay = compute_payment(cfg.scheme, sel.theta_bar, gamma, winner_theta,
                                       cfg.cost_model, &cfg.profit_model);
    const double utility = pay - effort_cost(cfg.cost_model, winner_theta, gamma);
    if (utility < -std::max(kUtilityTolerance, threshold)) {
      Witness w;
      w.thetas = thetas;
      w.seed = scenario_seed(ctx, index);
      w.agent_id = sel.winner_id;
      w.theta_bar = sel.theta_bar;
      w.gamma = gamma;
      w.payment = pay;
      w.observed = utility;
      w.gain = -utility;
      scan.agent.push_back(std::move(w));
    }
  }

  const RealizationChoice choice =
      best_realization(winner_theta, winner_theta, sel.theta_bar, cfg.scheme, cfg.cost_model,
                       cfg.profit_model, cfg.gamma_grid, cfg.tie_break);
  const double pay = compute_payment(cfg.scheme, sel.theta_bar, choice.gamma, winner_theta,
                                     cfg.cost_model, &cfg.profit_model);
  const double principal_utility = profit(cfg.profit_model, choice.gamma) - pay;
  if (principal_utility < -kUtilityTolerance) {
    Witness w;
    w.thetas = thetas;
    w.seed = scenario_seed(ctx, index);
    w.agent_id = sel.winner_id;
    w.theta_bar = sel.theta_bar;
    w.gamma = choice.gamma;
    w.payment = pay;
    w.observed = principal_utility;
    w.gain = -principal_utility;
    scan.principal.push_back(std::move(w));
  }
  return scan;
}

Scenario scenario_at(const FamilyContext& ctx, std::size_t index) {
  const ScenarioConfig& cfg = ctx.config();
  if (ctx.family->sampling == ScenarioFamily::Sampling::Seeded) {
    return generate_scenario(cfg, ctx.family->seeds[index]);
  }
  const std::vector<double> thetas = scenario_thetas(ctx, index);
  Scenario scenario;
  scenario.config = cfg;
  scenario.seed = 0;
  scenario.agents.reserve(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    AgentProfile agent;
    agent.id = static_cast<int>(i) + 1;
    agent.true_theta = thetas[i];
    if (!cfg.policies.empty()) {
      agent.policy = cfg.policies.size() == 1 ? cfg.policies.front() : cfg.policies[i];
    }
    scenario.agents.push_back(std::move(agent));
  }
  return scenario;
}

std::optional<Witness> so_violation(const FamilyContext& ctx, std::size_t index,
                                    double threshold) {
  const ScenarioConfig& cfg = ctx.config();
  const Scenario scenario = scenario_at(ctx, index);
  const Outcome outcome = run_game(scenario);

  std::vector<double> thetas;
  thetas.reserve(scenario.agents.size());
  for (const AgentProfile& agent : scenario.agents) thetas.push_back(agent.true_theta);

  const int efficient =
      efficient_agent_oracle(thetas, cfg.profit_model, cfg.cost_model, cfg.gamma_grid);
  const SocialOptimum optimum =
      social_optimum_oracle(thetas[static_cast<std::size_t>(efficient - 1)], cfg.profit_model,
                            cfg.cost_model, cfg.gamma_grid);
  const double gap = optimum.pi_star - outcome.social_welfare;
  if (std::abs(gap) <= std::max(kGainTolerance, threshold)) return std::nullopt;

  Witness w;
  w.thetas = thetas;
  w.seed = scenario_seed(ctx, index);
  w.agent_id = outcome.winner_id;
  w.expected_agent_id = efficient;
  w.theta_bar = outcome.theta_bar;
  w.gamma = outcome.gamma_realized;
  w.gamma_star = optimum.gamma_star;
  w.baseline = optimum.pi_star;
  w.observed = outcome.social_welfare;
  w.gain = gap;
  return w;
}

std::optional<Witness> selection_violation(const FamilyContext& ctx, std::size_t index) {
  const ScenarioConfig& cfg = ctx.config();
  const std::vector<double> thetas = scenario_thetas(ctx, index);
  const Selection sel = select_winner(truthful_bids(thetas));
  const int efficient =
      efficient_agent_oracle(thetas, cfg.profit_model, cfg.cost_model, cfg.gamma_grid);
  if (sel.winner_id == efficient) return std::nullopt;

  Witness w;
  w.thetas = thetas;
  w.seed = scenario_seed(ctx, index);
  w.agent_id = sel.winner_id;
  w.expected_agent_id = efficient;
  w.theta_bar = sel.theta_bar;
  return w;
}

}  // namespace

VerificationReport check_incentive_compatibility(const ScenarioFamily& family, int workers) {
  const FamilyContext ctx = make_context(family);
  VerificationReport report;
  report.property = Property::IncentiveCompatibility;
  report.tolerance = kGainTolerance;
  fill_family_fields(report, ctx);

  const auto n = static_cast<std::size_t>(ctx.config().num_agents);
  report.counterexamples = parallel_collect<Witness>(
      ctx.total, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<Witness> found;
        for (std::size_t index = begin; index < end; ++index) {
          const std::vector<double> thetas = scenario_thetas(ctx, index);
          for (std::size_t agent_pos = 0; agent_pos < n; ++agent_pos) {
            const double truthful =
                play_candidate(ctx.config(), thetas, agent_pos, thetas[agent_pos]).utility;
            for (double report_value : ctx.theta_points) {
              auto witness =
                  ic_violation(ctx, index, agent_pos, report_value, truthful, kGainTolerance);
              if (witness) found.push_back(std::move(*witness));
            }
          }
        }
        return found;
      });
  report.passed = report.counterexamples.empty();
  return report;
}

VerificationReport check_individual_rationality(const ScenarioFamily& family, int workers) {
  const FamilyContext ctx = make_context(family);
  VerificationReport report;
  report.property = Property::IndividualRationality;
  report.tolerance = kUtilityTolerance;
  fill_family_fields(report, ctx);

  const auto scans = parallel_collect<IrScan>(
      ctx.total, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<IrScan> out(1);
        for (std::size_t index = begin; index < end; ++index) {
          IrScan scan = ir_scan(ctx, index, 0.0);
          auto& agg = out.front();
          std::move(scan.agent.begin(), scan.agent.end(), std::back_inserter(agg.agent));
          std::move(scan.principal.begin(), scan.principal.end(),
                    std::back_inserter(agg.principal));
        }
        return out;
      });
  for (const IrScan& scan : scans) {
    report.counterexamples.insert(report.counterexamples.end(), scan.agent.begin(),
                                  scan.agent.end());
    report.principal_counterexamples.insert(report.principal_counterexamples.end(),
                                            scan.principal.begin(), scan.principal.end());
  }
  report.passed = report.counterexamples.empty();
  report.principal_ir_holds = report.principal_counterexamples.empty();
  return report;
}

VerificationReport check_social_optimality(const ScenarioFamily& family, int workers) {
  const FamilyContext ctx = make_context(family);
  VerificationReport report;
  report.property = Property::SocialOptimality;
  report.tolerance = kGainTolerance;
  fill_family_fields(report, ctx);

  report.counterexamples = parallel_collect<Witness>(
      ctx.total, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<Witness> found;
        for (std::size_t index = begin; index < end; ++index) {
          auto witness = so_violation(ctx, index, 0.0);
          if (witness) found.push_back(std::move(*witness));
        }
        return found;
      });
  report.passed = report.counterexamples.empty();
  return report;
}

VerificationReport check_selection_efficiency(const ScenarioFamily& family, int workers) {
  const FamilyContext ctx = make_context(family);
  VerificationReport report;
  report.property = Property::SelectionEfficiency;
  report.tolerance = 0.0;
  fill_family_fields(report, ctx);

  report.counterexamples = parallel_collect<Witness>(
      ctx.total, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<Witness> found;
        for (std::size_t index = begin; index < end; ++index) {
          auto witness = selection_violation(ctx, index);
          if (witness) found.push_back(std::move(*witness));
        }
        return found;
      });
  report.passed = report.counterexamples.empty();
  return report;
}

SearchResult search_counterexample(Property property, const ScenarioFamily& family,
                                   SearchBudget budget, double threshold) {
  const FamilyContext ctx = make_context(family);
  const ScenarioConfig& cfg = ctx.config();
  SearchResult result;

  auto spend = [&result, &budget]() -> bool {
    if (result.evaluations >= budget.max_evaluations) return false;
    ++result.evaluations;
    return true;
  };

  switch (property) {
    case Property::IncentiveCompatibility: {
      const auto n = static_cast<std::size_t>(cfg.num_agents);
      const double bar = std::max(kGainTolerance, threshold);
      for (std::size_t index = 0; index < ctx.total; ++index) {
        const std::vector<double> thetas = scenario_thetas(ctx, index);
        for (std::size_t agent_pos = 0; agent_pos < n; ++agent_pos) {
          if (!spend()) return result;
          const double truthful =
              play_candidate(cfg, thetas, agent_pos, thetas[agent_pos]).utility;
          for (double report_value : ctx.theta_points) {
            if (!spend()) return result;
            auto witness = ic_violation(ctx, index, agent_pos, report_value, truthful, bar);
            if (witness) {
              result.witness = std::move(witness);
              result.conclusive = true;
              return result;
            }
          }
        }
      }
      result.conclusive = true;
      return result;
    }
    case Property::IndividualRationality: {
      for (std::size_t index = 0; index < ctx.total; ++index) {
        if (!spend()) return result;
        IrScan scan = ir_scan(ctx, index, threshold);
        if (!scan.agent.empty()) {
          result.witness = std::move(scan.agent.front());
          result.conclusive = true;
          return result;
        }
      }
      result.conclusive = true;
      return result;
    }
    case Property::SocialOptimality: {
      for (std::size_t index = 0; index < ctx.total; ++index) {
        if (!spend()) return result;
        auto witness = so_violation(ctx, index, threshold);
        if (witness) {
          result.witness = std::move(witness);
          result.conclusive = true;
          return result;
        }
      }
      result.conclusive = true;
      return result;
    }
    case Property::SelectionEfficiency: {
      for (std::size_t index = 0; index < ctx.total; ++index) {
        if (!spend()) return result;
        auto witness = selection_violation(ctx, index);
        if (witness) {
          result.witness = std::move(witness);
          result.conclusive = true;
          return result;
        }
      }
      result.conclusive = true;
      return result;
    }
    case Property::PaymentProperty: {
      const double bar = std::max(kGainTolerance, threshold);
      for (double winner_theta : ctx.theta_points) {
        const std::vector<double> gammas = feasible_gammas(cfg.gamma_grid, winner_theta);
        for (double theta_bar : ctx.theta_points) {
          if (!spend()) return result;
          auto violation = check_payment_pair(cfg.scheme, cfg.cost_model, winner_theta,
                                              theta_bar, gammas, bar, &cfg.profit_model);
          if (violation) {
            Witness w;
            w.thetas = {winner_theta};
            w.theta_bar = theta_bar;
            w.gamma = violation->gamma;
            w.gain = violation->margin;
            w.condition = violation->condition;
            result.witness = std::move(w);
            result.conclusive = true;
            return result;
          }
        }
      }
      result.conclusive = true;
      return result;
    }
  }
  return result;
}

}  // namespace pasim
