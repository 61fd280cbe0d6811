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

#include "pasim/mechanism.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_set>
#include <utility>

#include "pasim/oracles.hpp"

namespace pasim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string trimmed_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

PaymentScheme PaymentScheme::second_price_linear() { return {}; }

PaymentScheme PaymentScheme::report_only(double offset, double slope) {
  PaymentScheme s;
  s.rule = ReportOnlyRule{AffineFunction{offset, slope}};
  return s;
}

PaymentScheme PaymentScheme::realization_only(double offset, double slope) {
  PaymentScheme s;
  s.rule = RealizationOnlyRule{AffineFunction{offset, slope}};
  return s;
}

PaymentScheme PaymentScheme::claimed_effort() {
  PaymentScheme s;
  s.rule = ClaimedEffortRule{};
  return s;
}

PaymentScheme PaymentScheme::vcg_style(Grid gamma_grid) {
  validate_grid(gamma_grid, "vcg gamma grid");
  PaymentScheme s;
  s.rule = VcgStyleRule{gamma_grid};
  return s;
}

std::string describe(const PaymentScheme& scheme) {
  return std::visit(
      overloaded{
          [](const SecondPriceLinearRule&) -> std::string { return "SecondPriceLinear"; },
          [](const ReportOnlyRule& r) -> std::string {
            return "ReportOnly(" + trimmed_number(r.fn.offset) + "," +
                   trimmed_number(r.fn.slope) + ")";
          },
          [](const RealizationOnlyRule& r) -> std::string {
            return "RealizationOnly(" + trimmed_number(r.fn.offset) + "," +
                   trimmed_number(r.fn.slope) + ")";
          },
          [](const ClaimedEffortRule&) -> std::string { return "ClaimedEffort"; },
          [](const VcgStyleRule&) -> std::string { return "VCGStyle"; },
      },
      scheme.rule);
}

Selection select_winner(std::span<const Bid> bids) {
  if (bids.size() < 2) {
    throw ValidationError("select_winner: at least two bids are required");
  }
  std::unordered_set<int> seen;
  for (const Bid& bid : bids) {
    validate_bid(bid);
    if (!seen.insert(bid.agent_id).second) {
      throw ValidationError("select_winner: duplicate agent id " +
                            std::to_string(bid.agent_id));
    }
  }

  const Bid* winner = &bids[0];
  for (const Bid& bid : bids) {
    if (bid.reported_theta < winner->reported_theta ||
        (bid.reported_theta == winner->reported_theta && bid.agent_id < winner->agent_id)) {
      winner = &bid;
    }
  }
  double theta_bar = std::numeric_limits<double>::infinity();
  for (const Bid& bid : bids) {
    if (bid.agent_id != winner->agent_id) {
      theta_bar = std::min(theta_bar, bid.reported_theta);
    }
  }
  return {winner->agent_id, theta_bar};
}

double compute_payment(const PaymentScheme& scheme, double theta_bar, double gamma,
                       double reported_theta, const CostModel& cost_model,
                       const ProfitModel* profit_model) {
  if (!std::isfinite(theta_bar) || !std::isfinite(gamma) || !std::isfinite(reported_theta)) {
    throw ValidationError("compute_payment: inputs must be finite");
  }
  if (gamma < 0.0 || reported_theta < 0.0) {
    throw ValidationError("compute_payment: misalignments must be nonnegative");
  }
  if (scheme.enforce_realization_cap && gamma > reported_theta) {
    return 0.0;
  }
  return std::visit(
      overloaded{
          [&](const SecondPriceLinearRule&) { return theta_bar - gamma; },
          [&](const ReportOnlyRule& r) { return r.fn(reported_theta); },
          [&](const RealizationOnlyRule& r) { return r.fn(gamma); },
          [&](const ClaimedEffortRule&) {
            // A claim below the realization is worthless whatever the cap
            // flag says; there is no effort to reimburse.
            if (gamma > reported_theta) return 0.0;
            return effort_cost(cost_model, reported_theta, gamma);
          },
          [&](const VcgStyleRule& r) {
            if (profit_model == nullptr) {
              throw ConfigError("VCGStyle payment needs a profit model");
            }
            const SocialOptimum opt =
                social_optimum_oracle(reported_theta, *profit_model, cost_model, r.gamma_grid);
            return profit(*profit_model, gamma) - opt.pi_star;
          },
      },
      scheme.rule);
}

namespace {

// The property quantifies over payments of the shape P(theta_bar, gamma).
// The winner's payment is evaluated as if the report were truthful, which is
// exactly what admits VcgStyle (its report-dependence collapses onto the
// swept true type) and rules out the schemes that need the report as a free
// variable.
void require_checkable(const PaymentScheme& scheme) {
  if (std::holds_alternative<ReportOnlyRule>(scheme.rule) ||
      std::holds_alternative<ClaimedEffortRule>(scheme.rule)) {
    throw UnsupportedSchemeError("payment property is defined for payments of "
                                 "(second bid, realization) only; " +
                                 describe(scheme) + " reads the report directly");
  }
}

}  // namespace

std::optional<PaymentConditionViolation> check_payment_pair(
    const PaymentScheme& scheme, const CostModel& cost_model, double winner_theta,
    double theta_bar, const std::vector<double>& gammas, double tolerance,
    const ProfitModel* profit_model) {
  require_checkable(scheme);
  double best_margin = -std::numeric_limits<double>::infinity();
  for (double gamma : gammas) {
    const double pay =
        compute_payment(scheme, theta_bar, gamma, winner_theta, cost_model, profit_model);
    const double cost = effort_cost(cost_model, winner_theta, gamma);
    const double margin = pay - cost;
    if (winner_theta >= theta_bar) {
      if (margin > tolerance) {
        return PaymentConditionViolation{1, winner_theta, theta_bar, gamma, margin};
      }
    } else {
      best_margin = std::max(best_margin, margin);
      if (margin > tolerance) return std::nullopt;  // condition 2 satisfied
    }
  }
  if (winner_theta < theta_bar) {
    return PaymentConditionViolation{2, winner_theta, theta_bar, std::nullopt, best_margin};
  }
  return std::nullopt;
}

PaymentPropertyReport check_payment_property(const PaymentScheme& scheme,
                                             const CostModel& cost_model,
                                             const Grid& theta_grid, const Grid& gamma_grid,
                                             const ProfitModel* profit_model) {
  require_checkable(scheme);
  validate_grid(theta_grid, "theta grid");
  validate_grid(gamma_grid, "gamma grid");
  if (std::holds_alternative<VcgStyleRule>(scheme.rule) && profit_model == nullptr) {
    throw ConfigError("VCGStyle payment needs a profit model");
  }

  PaymentPropertyReport report;
  report.theta_grid = theta_grid;
  report.gamma_grid = gamma_grid;

  const std::vector<double> thetas = theta_grid.points();
  for (double winner_theta : thetas) {
    const std::vector<double> gammas = feasible_gammas(gamma_grid, winner_theta);
    for (double theta_bar : thetas) {
      if (winner_theta >= theta_bar) {
        // Condition 1: record every realization where the payment beats the
        // effort cost.
        for (double gamma : gammas) {
          const double pay = compute_payment(scheme, theta_bar, gamma, winner_theta,
                                             cost_model, profit_model);
          const double cost = effort_cost(cost_model, winner_theta, gamma);
          const double margin = pay - cost;
          if (margin > report.tolerance) {
            report.condition1_holds = false;
            report.violations.push_back({1, winner_theta, theta_bar, gamma, margin});
          }
        }
      } else {
        // Condition 2: some realization must pay strictly more than it costs.
        auto violation = check_payment_pair(scheme, cost_model, winner_theta, theta_bar,
                                            gammas, report.tolerance, profit_model);
        if (violation) {
          report.condition2_holds = false;
          report.violations.push_back(*violation);
        }
      }
    }
  }
  return report;
}

}  // namespace pasim
