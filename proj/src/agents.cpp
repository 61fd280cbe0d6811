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

#include "pasim/agents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pasim {

namespace {
// Window inside which candidate payoffs count as tied.
constexpr double kTieWindow = 1e-9;
}  // namespace

std::string to_string(TieBreakPolicy policy) {
  switch (policy) {
    case TieBreakPolicy::ProSocial: return "ProSocial";
    case TieBreakPolicy::Adversarial: return "Adversarial";
    case TieBreakPolicy::MaxAlignment: return "MaxAlignment";
    case TieBreakPolicy::Lazy: return "Lazy";
  }
  return "ProSocial";
}

std::vector<double> feasible_realizations(double true_theta, double reported_theta,
                                          const Grid& gamma_grid) {
  if (!std::isfinite(true_theta) || true_theta < 0.0 || !std::isfinite(reported_theta) ||
      reported_theta < 0.0) {
    throw ValidationError("feasible_realizations: misalignments must be finite and nonnegative");
  }
  return feasible_gammas(gamma_grid, std::min(true_theta, reported_theta));
}

RealizationChoice best_realization(double true_theta, double reported_theta,
                                   double theta_bar, const PaymentScheme& scheme,
                                   const CostModel& cost_model,
                                   const ProfitModel& profit_model, const Grid& gamma_grid,
                                   TieBreakPolicy tie_break) {
  const std::vector<double> candidates =
      feasible_realizations(true_theta, reported_theta, gamma_grid);

  std::vector<double> utilities;
  utilities.reserve(candidates.size());
  double best_utility = -std::numeric_limits<double>::infinity();
  for (double gamma : candidates) {
    const double pay =
        compute_payment(scheme, theta_bar, gamma, reported_theta, cost_model, &profit_model);
    const double u = pay - effort_cost(cost_model, true_theta, gamma);
    utilities.push_back(u);
    best_utility = std::max(best_utility, u);
  }

  // Pick among the near-ties per policy. Candidates are ascending, so "first
  // match" means smallest realization and "last match" the largest.
  std::size_t chosen = 0;
  bool have_choice = false;
  double best_welfare = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (utilities[i] < best_utility - kTieWindow) continue;
    const double welfare = profit(profit_model, candidates[i]) -
                           effort_cost(cost_model, true_theta, candidates[i]);
    switch (tie_break) {
      case TieBreakPolicy::ProSocial:
        if (!have_choice || welfare > best_welfare) {
          chosen = i;
          best_welfare = welfare;
        }
        break;
      case TieBreakPolicy::Adversarial:
        if (!have_choice || welfare <= best_welfare) {
          chosen = i;
          best_welfare = welfare;
        }
        break;
      case TieBreakPolicy::MaxAlignment:
        if (!have_choice) chosen = i;
        break;
      case TieBreakPolicy::Lazy:
        chosen = i;
        break;
    }
    have_choice = true;
  }
  return {candidates[chosen], utilities[chosen]};
}

BidChoice best_response_bid(const AgentProfile& profile, std::span<const Bid> other_bids,
                            const PaymentScheme& scheme, const CostModel& cost_model,
                            const ProfitModel& profit_model, const Grid& theta_grid,
                            const Grid& gamma_grid, TieBreakPolicy tie_break) {
  if (!std::isfinite(profile.true_theta) || profile.true_theta < 0.0) {
    throw ValidationError("best_response_bid: the true misalignment must be finite and nonnegative");
  }
  std::vector<double> candidates = theta_grid.points();
  candidates.push_back(profile.true_theta);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Bid> bids(other_bids.begin(), other_bids.end());
  bids.push_back({profile.id, 0.0});

  std::vector<double> utilities;
  utilities.reserve(candidates.size());
  double best_utility = -std::numeric_limits<double>::infinity();
  for (double report : candidates) {
    bids.back().reported_theta = report;
    const Selection sel = select_winner(bids);
    double u = 0.0;  // losing pays nothing and costs nothing
    if (sel.winner_id == profile.id) {
      u = best_realization(profile.true_theta, report, sel.theta_bar, scheme, cost_model,
                           profit_model, gamma_grid, tie_break)
              .utility;
    }
    utilities.push_back(u);
    best_utility = std::max(best_utility, u);
  }

  // Prefer the truthful report among the maximizers, else the lowest one.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i] == profile.true_theta && utilities[i] >= best_utility - kTieWindow) {
      return {candidates[i], utilities[i]};
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (utilities[i] >= best_utility - kTieWindow) {
      return {candidates[i], utilities[i]};
    }
  }
  return {profile.true_theta, 0.0};  // unreachable: candidates is never empty
}

}  // namespace pasim
