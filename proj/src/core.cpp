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

#include "pasim/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace pasim {

namespace {

std::string trimmed_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

PriorityVector::PriorityVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw ValidationError("priority vector must have at least one task entry");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw ValidationError("priority vector entries must be finite");
    }
  }
}

std::string to_string(MisalignmentMetric metric) {
  switch (metric) {
    case MisalignmentMetric::L1: return "L1";
    case MisalignmentMetric::L2: return "L2";
    case MisalignmentMetric::Linf: return "Linf";
  }
  return "L1";
}

double misalignment(MisalignmentMetric metric, const PriorityVector& a,
                    const PriorityVector& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw DimensionError("misalignment: priority vectors must be non-empty");
  }
  if (a.size() != b.size()) {
    throw DimensionError("misalignment: priority vectors differ in length (" +
                         std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  const auto& av = a.values();
  const auto& bv = b.values();
  double acc = 0.0;
  switch (metric) {
    case MisalignmentMetric::L1:
      for (std::size_t i = 0; i < av.size(); ++i) acc += std::abs(av[i] - bv[i]);
      return acc;
    case MisalignmentMetric::L2:
      for (std::size_t i = 0; i < av.size(); ++i) {
        const double d = av[i] - bv[i];
        acc += d * d;
      }
      return std::sqrt(acc);
    case MisalignmentMetric::Linf:
      for (std::size_t i = 0; i < av.size(); ++i) {
        acc = std::max(acc, std::abs(av[i] - bv[i]));
      }
      return acc;
  }
  return acc;
}

CostModel CostModel::power(double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw ValidationError("cost exponent must be finite and >= 1");
  }
  return {Family::Power, p};
}

double effort_cost(const CostModel& model, double theta, double gamma) {
  if (!std::isfinite(theta) || !std::isfinite(gamma)) {
    throw ValidationError("effort_cost: inputs must be finite");
  }
  if (theta < 0.0 || gamma < 0.0) {
    throw ValidationError("effort_cost: misalignments must be nonnegative");
  }
  if (gamma > theta) {
    throw FeasibilityError("effort_cost: realized misalignment " + trimmed_number(gamma) +
                           " exceeds the initial " + trimmed_number(theta));
  }
  const double d = theta - gamma;
  switch (model.family) {
    case CostModel::Family::Linear: return d;
    case CostModel::Family::Quadratic: return d * d;
    case CostModel::Family::Power: return std::pow(d, model.exponent);
  }
  return d;
}

ProfitModel ProfitModel::linear_decreasing(double s0, double a) {
  if (!std::isfinite(s0) || !std::isfinite(a) || s0 < 0.0 || a <= 0.0) {
    throw ValidationError("profit model requires s0 >= 0 and a positive slope");
  }
  return {Family::LinearDecreasing, s0, a};
}

ProfitModel ProfitModel::quadratic_decreasing(double s0, double c) {
  if (!std::isfinite(s0) || !std::isfinite(c) || s0 < 0.0 || c <= 0.0) {
    throw ValidationError("profit model requires s0 >= 0 and a positive slope");
  }
  return {Family::QuadraticDecreasing, s0, c};
}

double profit(const ProfitModel& model, double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw ValidationError("profit: realized misalignment must be finite and nonnegative");
  }
  switch (model.family) {
    case ProfitModel::Family::LinearDecreasing: return model.s0 - model.slope * gamma;
    case ProfitModel::Family::QuadraticDecreasing: return model.s0 - model.slope * gamma * gamma;
  }
  return model.s0;
}

AgentProfile make_vector_agent(int id, MisalignmentMetric metric,
                               const PriorityVector& principal, PriorityVector own,
                               BehaviorPolicy policy) {
  AgentProfile profile;
  profile.id = id;
  profile.true_theta = misalignment(metric, principal, own);
  profile.true_priority = std::move(own);
  profile.policy = policy;
  return profile;
}

void validate_bid(const Bid& bid) {
  if (!std::isfinite(bid.reported_theta) || bid.reported_theta < 0.0) {
    throw ValidationError("bid of agent " + std::to_string(bid.agent_id) +
                          " must be finite and nonnegative");
  }
}

void validate_realization(const Realization& realization, double true_theta,
                          double reported_theta) {
  if (!std::isfinite(realization.gamma) || realization.gamma < 0.0) {
    throw ValidationError("realization must be finite and nonnegative");
  }
  if (realization.gamma > true_theta) {
    throw FeasibilityError("realization " + trimmed_number(realization.gamma) +
                           " exceeds the initial misalignment " + trimmed_number(true_theta));
  }
  if (realization.gamma > reported_theta) {
    throw FeasibilityError("realization " + trimmed_number(realization.gamma) +
                           " exceeds the reported misalignment " +
                           trimmed_number(reported_theta));
  }
}

std::string describe(const CostModel& model) {
  switch (model.family) {
    case CostModel::Family::Linear: return "Linear";
    case CostModel::Family::Quadratic: return "Quadratic";
    case CostModel::Family::Power: return "Power(" + trimmed_number(model.exponent) + ")";
  }
  return "Linear";
}

std::string describe(const ProfitModel& model) {
  const std::string params =
      "(" + trimmed_number(model.s0) + "," + trimmed_number(model.slope) + ")";
  switch (model.family) {
    case ProfitModel::Family::LinearDecreasing: return "LinearDecreasing" + params;
    case ProfitModel::Family::QuadraticDecreasing: return "QuadraticDecreasing" + params;
  }
  return "QuadraticDecreasing" + params;
}

}  // namespace pasim
