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

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pasim/core.hpp"
#include "pasim/grid.hpp"

namespace pasim {

struct AffineFunction {
  double offset = 0.0;
  double slope = 0.0;

  double operator()(double x) const { return offset + slope * x; }
};

// Winner payment rules. SecondPriceLinear is the rule the mechanism is built
// around; the others form a catalog of schemes that fail one of the required
// properties and exist to be exercised by the verifiers.

/// Pays (second lowest bid) - (realized misalignment).
struct SecondPriceLinearRule {};

/// Pays fn(reported misalignment), blind to the realization.
struct ReportOnlyRule {
  AffineFunction fn;
};

/// Pays fn(realized misalignment), blind to the report.
struct RealizationOnlyRule {
  AffineFunction fn;
};

/// Pays the effort the report implies, h(reported, realized). A winner can
/// inflate the report, realize its own initial priority unchanged, and still
/// collect. Claims beyond the realization (gamma above the report) pay zero.
struct ClaimedEffortRule {};

/// Pays S(gamma) minus the best welfare attainable at the reported type
/// (brute-forced over `gamma_grid`). The transfer-the-surplus construction;
/// kept in the catalog because it fails the payment conditions here.
struct VcgStyleRule {
  Grid gamma_grid{0.0, 4.0, 0.05};
};

using PaymentRule = std::variant<SecondPriceLinearRule, ReportOnlyRule,
                                 RealizationOnlyRule, ClaimedEffortRule, VcgStyleRule>;

struct PaymentScheme {
  PaymentRule rule{SecondPriceLinearRule{}};
  // Pay the winner nothing when the realized misalignment exceeds the
  // reported one. Restricts falsification; on by default.
  bool enforce_realization_cap = true;

  static PaymentScheme second_price_linear();
  static PaymentScheme report_only(double offset, double slope);
  static PaymentScheme realization_only(double offset, double slope);
  static PaymentScheme claimed_effort();
  static PaymentScheme vcg_style(Grid gamma_grid);
};

std::string describe(const PaymentScheme& scheme);

/// Only selection rule in scope: lowest reported misalignment wins, ties go
/// to the lowest agent id. theta_bar is the lowest bid among the non-winners
/// (with two agents, the other agent's bid).
struct Selection {
  int winner_id = 0;
  double theta_bar = 0.0;
};

/// Requires at least two bids (theta_bar is undefined otherwise) and unique
/// agent ids. Permutation-covariant: bid order never affects the result.
Selection select_winner(std::span<const Bid> bids);

/// Payment to the winner. Losers are paid zero by construction and never
/// reach this function. `profit_model` is only consulted by VcgStyle and
/// missing it there is a ConfigError.
double compute_payment(const PaymentScheme& scheme, double theta_bar, double gamma,
                       double reported_theta, const CostModel& cost_model,
                       const ProfitModel* profit_model = nullptr);

struct PaymentConditionViolation {
  int condition = 0;  // 1 or 2
  double winner_theta = 0.0;
  double theta_bar = 0.0;
  // Set for condition-1 violations: the realization where the payment
  // exceeded the effort cost. Condition-2 violations are pair-level (no
  // realization worked), so it stays empty there.
  std::optional<double> gamma;
  // payment minus effort cost at the witness; for condition 2 the best
  // margin seen across the whole realization scan.
  double margin = 0.0;
};

struct PaymentPropertyReport {
  bool condition1_holds = true;
  bool condition2_holds = true;
  std::vector<PaymentConditionViolation> violations;
  Grid theta_grid;
  Grid gamma_grid;
  double tolerance = 1e-9;

  bool passed() const { return condition1_holds && condition2_holds; }
};

/// Exhaustively checks the two conditions a winner payment P(theta_bar,
/// gamma) must satisfy for truthful bidding to be safe:
///
///   1. whenever the winner's true misalignment is at or above the second
///      lowest bid, no feasible realization pays more than the effort cost;
///   2. whenever it is strictly below, some feasible realization on the grid
///      pays strictly more than the effort cost.
///
/// A pass is a certificate relative to the two grids; condition 2 failing
/// means "no grid witness found", which the report records alongside the
/// grids. Only schemes whose payment reads (theta_bar, gamma) fit this
/// signature: ReportOnly and ClaimedEffort raise UnsupportedSchemeError.
/// VcgStyle is admitted with its welfare benchmark evaluated at the swept
/// true type, i.e. as if the winner had reported truthfully.
PaymentPropertyReport check_payment_property(const PaymentScheme& scheme,
                                             const CostModel& cost_model,
                                             const Grid& theta_grid,
                                             const Grid& gamma_grid,
                                             const ProfitModel* profit_model = nullptr);

/// Single (winner_theta, theta_bar) cell of the property above; returns the
/// first violation in ascending-gamma order, if any. Shared by the full
/// check and the counterexample search.
std::optional<PaymentConditionViolation> check_payment_pair(
    const PaymentScheme& scheme, const CostModel& cost_model, double winner_theta,
    double theta_bar, const std::vector<double>& gammas, double tolerance,
    const ProfitModel* profit_model = nullptr);

}  // namespace pasim
