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

#include <span>
#include <string>
#include <vector>

#include "pasim/core.hpp"
#include "pasim/grid.hpp"
#include "pasim/mechanism.hpp"

namespace pasim {

/// Resolves the winner's indifference between equally profitable
/// realizations (under the linear payment the winner's utility does not
/// depend on the realization at all, so this choice decides the welfare).
/// ProSocial picks the welfare-maximizing one, Adversarial the
/// welfare-minimizing one, MaxAlignment the smallest, Lazy the largest.
enum class TieBreakPolicy { ProSocial, Adversarial, MaxAlignment, Lazy };

std::string to_string(TieBreakPolicy policy);

/// Realizations available to an agent: grid points in
/// [0, min(true_theta, reported_theta)], with 0 and the cap always included.
/// Never empty; 0 is always feasible.
std::vector<double> feasible_realizations(double true_theta, double reported_theta,
                                          const Grid& gamma_grid);

struct RealizationChoice {
  double gamma = 0.0;
  double utility = 0.0;
};

/// Winner's realization problem: maximize payment minus true effort cost
/// over the feasible realizations. Candidates within 1e-9 of the maximum
/// count as tied and go to the tie-break policy.
RealizationChoice best_realization(double true_theta, double reported_theta,
                                   double theta_bar, const PaymentScheme& scheme,
                                   const CostModel& cost_model,
                                   const ProfitModel& profit_model,
                                   const Grid& gamma_grid, TieBreakPolicy tie_break);

struct BidChoice {
  double reported_theta = 0.0;
  double utility = 0.0;
};

/// Full-information deviation scan: with the other bids held fixed, try every
/// report on the grid plus the truthful value, score losing as zero and
/// winning by best_realization, and return the best. Reports within 1e-9 of
/// the maximum count as tied; the truthful report wins ties when present,
/// otherwise the lowest report does. The report candidates deliberately range
/// over the whole grid independent of the true type (inflated reports are how
/// some catalog schemes break), while realizations stay capped.
BidChoice best_response_bid(const AgentProfile& profile, std::span<const Bid> other_bids,
                            const PaymentScheme& scheme, const CostModel& cost_model,
                            const ProfitModel& profit_model, const Grid& theta_grid,
                            const Grid& gamma_grid, TieBreakPolicy tie_break);

}  // namespace pasim
