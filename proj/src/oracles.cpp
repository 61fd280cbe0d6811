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

#include "pasim/oracles.hpp"

#include <cmath>

#include "pasim/errors.hpp"

namespace pasim {

SocialOptimum social_optimum_oracle(double theta, const ProfitModel& profit_model,
                                    const CostModel& cost_model, const Grid& gamma_grid) {
  if (!std::isfinite(theta) || theta < 0.0) {
    throw ValidationError("social_optimum_oracle: theta must be finite and nonnegative");
  }
  SocialOptimum best{0.0, profit(profit_model, 0.0) - effort_cost(cost_model, theta, 0.0)};
  for (double gamma : feasible_gammas(gamma_grid, theta)) {
    const double welfare =
        profit(profit_model, gamma) - effort_cost(cost_model, theta, gamma);
    // Strict improvement only: ties stay with the smallest realization.
    if (welfare > best.pi_star) {
      best = {gamma, welfare};
    }
  }
  return best;
}

int efficient_agent_oracle(std::span<const double> thetas, const ProfitModel& profit_model,
                           const CostModel& cost_model, const Grid& gamma_grid) {
  if (thetas.size() < 2) {
    throw ValidationError("efficient_agent_oracle: at least two agents are required");
  }
  int best_position = 1;
  double best_welfare =
      social_optimum_oracle(thetas[0], profit_model, cost_model, gamma_grid).pi_star;
  for (std::size_t i = 1; i < thetas.size(); ++i) {
    const double welfare =
        social_optimum_oracle(thetas[i], profit_model, cost_model, gamma_grid).pi_star;
    if (welfare > best_welfare) {
      best_welfare = welfare;
      best_position = static_cast<int>(i) + 1;
    }
  }
  return best_position;
}

}  // namespace pasim
