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

#include "pasim/core.hpp"
#include "pasim/grid.hpp"

namespace pasim {

struct SocialOptimum {
  double gamma_star = 0.0;
  double pi_star = 0.0;
};

/// Brute-force welfare optimum for a winner of type theta: exhaustive argmax
/// of profit(gamma) - effort_cost(theta, gamma) over the feasible gamma grid
/// (ties to the smallest gamma). This is the ground truth that mechanism
/// outcomes are measured against, so it stays a plain scan with no shortcuts.
SocialOptimum social_optimum_oracle(double theta, const ProfitModel& profit_model,
                                    const CostModel& cost_model, const Grid& gamma_grid);

/// 1-based position of the agent whose selection supports the highest
/// attainable welfare (ties to the lowest position). Lets tests ask whether
/// picking the lowest report is also the welfare-right pick.
int efficient_agent_oracle(std::span<const double> thetas, const ProfitModel& profit_model,
                           const CostModel& cost_model, const Grid& gamma_grid);

}  // namespace pasim
