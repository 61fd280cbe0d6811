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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pasim/errors.hpp"

namespace pasim {

/// Per-task priority weights. Entries are dimensionless reals; the toolkit
/// never interprets individual weights, only distances between two vectors.
/// Construction rejects empty vectors and non-finite entries.
class PriorityVector {
 public:
  PriorityVector() = default;
  explicit PriorityVector(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

enum class MisalignmentMetric { L1, L2, Linf };

std::string to_string(MisalignmentMetric metric);

/// Norm of the difference of two equally sized priority vectors. Satisfies
/// the metric axioms: zero at equal vectors, symmetric, nonnegative,
/// triangle inequality.
double misalignment(MisalignmentMetric metric, const PriorityVector& a,
                    const PriorityVector& b);

/// Effort cost h(theta, gamma) of shifting a misalignment from theta down to
/// gamma. Every family vanishes at gamma == theta and is non-increasing in
/// gamma on [0, theta]. Linear is (theta - gamma), Quadratic its square,
/// Power the general (theta - gamma)^p with p >= 1.
struct CostModel {
  enum class Family { Linear, Quadratic, Power };

  Family family = Family::Linear;
  double exponent = 1.0;  // Power only

  static CostModel linear() { return {Family::Linear, 1.0}; }
  static CostModel quadratic() { return {Family::Quadratic, 2.0}; }
  static CostModel power(double p);
};

/// Evaluates the effort cost. Requires 0 <= gamma <= theta; a gamma above
/// theta is infeasible (drifting further away is never beneficial) and
/// raises FeasibilityError instead of being evaluated.
double effort_cost(const CostModel& model, double theta, double gamma);

/// Principal profit S(gamma), strictly decreasing in the realized
/// misalignment. Not clamped: large gamma may produce negative profit.
struct ProfitModel {
  enum class Family { LinearDecreasing, QuadraticDecreasing };

  Family family = Family::QuadraticDecreasing;
  double s0 = 4.0;     // profit at full alignment
  double slope = 1.0;  // decay coefficient, > 0

  static ProfitModel linear_decreasing(double s0, double a);
  static ProfitModel quadratic_decreasing(double s0, double c);
};

double profit(const ProfitModel& model, double gamma);

enum class PolicyKind { Truthful, Strategic, Fixed };

/// How an agent bids. Truthful reports its initial misalignment, Strategic
/// runs a best-response scan against the other bids, Fixed always reports
/// `fixed_report` and may pin the realization too (clamped to feasibility).
struct BehaviorPolicy {
  PolicyKind kind = PolicyKind::Truthful;
  double fixed_report = 0.0;
  std::optional<double> fixed_gamma;

  static BehaviorPolicy truthful() { return {}; }
  static BehaviorPolicy strategic() { return {PolicyKind::Strategic, 0.0, std::nullopt}; }
  static BehaviorPolicy fixed(double report, std::optional<double> gamma = std::nullopt) {
    return {PolicyKind::Fixed, report, gamma};
  }
};

struct AgentProfile {
  int id = 0;
  double true_theta = 0.0;
  // Vector mode only. When present, true_theta is derived from it.
  std::optional<PriorityVector> true_priority;
  BehaviorPolicy policy;
};

/// Builds a vector-mode profile. The initial misalignment is always derived
/// from the two priority vectors, never set independently.
AgentProfile make_vector_agent(int id, MisalignmentMetric metric,
                               const PriorityVector& principal, PriorityVector own,
                               BehaviorPolicy policy = {});

struct Bid {
  int agent_id = 0;
  double reported_theta = 0.0;
};

struct Realization {
  int agent_id = 0;
  double gamma = 0.0;
};

void validate_bid(const Bid& bid);

/// Feasibility of a realization against the agent's initial and reported
/// misalignment: 0 <= gamma <= true_theta and gamma <= reported_theta.
void validate_realization(const Realization& realization, double true_theta,
                          double reported_theta);

std::string describe(const CostModel& model);
std::string describe(const ProfitModel& model);

}  // namespace pasim
