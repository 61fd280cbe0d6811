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

#include "pasim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pasim {

namespace {

using nlohmann::json;

json grid_json(const Grid& grid) {
  return json{{"lo", grid.lo}, {"hi", grid.hi}, {"step", grid.step}};
}

json witness_json(const Witness& w) {
  json j;
  j["thetas"] = w.thetas;
  if (w.seed) j["seed"] = *w.seed;
  if (w.agent_id) j["agentId"] = *w.agent_id;
  if (w.expected_agent_id) j["expectedAgentId"] = *w.expected_agent_id;
  if (w.misreport) j["misreport"] = *w.misreport;
  if (w.theta_bar) j["thetaBar"] = *w.theta_bar;
  if (w.gamma) j["gamma"] = *w.gamma;
  if (w.gamma_star) j["gammaStar"] = *w.gamma_star;
  if (w.payment) j["payment"] = *w.payment;
  if (w.baseline) j["baseline"] = *w.baseline;
  if (w.observed) j["observed"] = *w.observed;
  j["gain"] = w.gain;
  if (w.condition) j["condition"] = *w.condition;
  return j;
}

std::string opt_cell(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

std::string opt_cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

void witness_csv_row(std::ostringstream& out, std::size_t index, const Witness& w) {
  out << index << ',' << (w.seed ? std::to_string(*w.seed) : std::string()) << ','
      << opt_cell(w.agent_id) << ',' << opt_cell(w.expected_agent_id) << ','
      << opt_cell(w.misreport) << ',' << opt_cell(w.theta_bar) << ',' << opt_cell(w.gamma)
      << ',' << opt_cell(w.gamma_star) << ',' << opt_cell(w.payment) << ','
      << opt_cell(w.baseline) << ',' << opt_cell(w.observed) << ',' << format_real(w.gain)
      << ',' << opt_cell(w.condition) << ',';
  for (std::size_t i = 0; i < w.thetas.size(); ++i) {
    if (i > 0) out << ';';
    out << format_real(w.thetas[i]);
  }
  out << '\n';
}

constexpr const char* kWitnessHeader =
    "index,seed,agent_id,expected_agent_id,misreport,theta_bar,gamma,gamma_star,"
    "payment,baseline,observed,gain,condition,thetas\n";

}  // namespace

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string outcome_csv(const std::vector<SeedResult>& rows) {
  std::ostringstream out;
  out << "seed,winner_id,theta_bar,gamma_realized,payment_w,utility_w,"
         "principal_utility,social_welfare,pi_star,welfare_gap\n";
  for (const SeedResult& row : rows) {
    const auto winner_pos = static_cast<std::size_t>(row.outcome.winner_id - 1);
    out << row.seed << ',' << row.outcome.winner_id << ','
        << format_real(row.outcome.theta_bar) << ','
        << format_real(row.outcome.gamma_realized) << ','
        << format_real(row.outcome.payments[winner_pos]) << ','
        << format_real(row.outcome.agent_utilities[winner_pos]) << ','
        << format_real(row.outcome.principal_utility) << ','
        << format_real(row.outcome.social_welfare) << ',' << format_real(row.pi_star) << ','
        << format_real(row.welfare_gap) << '\n';
  }
  return out.str();
}

std::string outcome_json(const std::vector<SeedResult>& rows) {
  json arr = json::array();
  for (const SeedResult& row : rows) {
    json bids = json::array();
    for (const Bid& bid : row.outcome.bids) {
      bids.push_back({{"agentId", bid.agent_id}, {"reportedTheta", bid.reported_theta}});
    }
    json entry{{"seed", row.seed},
               {"winnerId", row.outcome.winner_id},
               {"thetaBar", row.outcome.theta_bar},
               {"bids", bids},
               {"gammaRealized", row.outcome.gamma_realized},
               {"payments", row.outcome.payments},
               {"agentUtilities", row.outcome.agent_utilities},
               {"principalUtility", row.outcome.principal_utility},
               {"socialWelfare", row.outcome.social_welfare},
               {"piStar", row.pi_star},
               {"welfareGap", row.welfare_gap}};
    if (row.outcome.strategic_rounds > 0) {
      entry["strategicRounds"] = row.outcome.strategic_rounds;
      entry["strategicConverged"] = row.outcome.strategic_converged;
    }
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

std::string verification_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << kWitnessHeader;
  for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
    witness_csv_row(out, i, report.counterexamples[i]);
  }
  return out.str();
}

std::string verification_json(const VerificationReport& report) {
  json j{{"property", to_string(report.property)},
         {"passed", report.passed},
         {"tolerance", report.tolerance},
         {"scenariosChecked", report.scenarios_checked},
         {"sampling", report.sampling},
         {"thetaGrid", grid_json(report.theta_grid)},
         {"gammaGrid", grid_json(report.gamma_grid)},
         {"scheme", report.scheme},
         {"cost", report.cost_model},
         {"profit", report.profit_model},
         {"tieBreak", report.tie_break}};
  json witnesses = json::array();
  for (const Witness& w : report.counterexamples) witnesses.push_back(witness_json(w));
  j["counterexamples"] = std::move(witnesses);
  if (report.property == Property::IndividualRationality) {
    json principal_witnesses = json::array();
    for (const Witness& w : report.principal_counterexamples) {
      principal_witnesses.push_back(witness_json(w));
    }
    j["principal"] = json{{"holds", report.principal_ir_holds},
                          {"counterexamples", std::move(principal_witnesses)}};
  }
  return j.dump(2) + "\n";
}

std::string payment_report_csv(const PaymentPropertyReport& report) {
  std::ostringstream out;
  out << "condition,winner_theta,theta_bar,gamma,margin\n";
  for (const PaymentConditionViolation& v : report.violations) {
    out << v.condition << ',' << format_real(v.winner_theta) << ','
        << format_real(v.theta_bar) << ',' << opt_cell(v.gamma) << ','
        << format_real(v.margin) << '\n';
  }
  return out.str();
}

std::string payment_report_json(const PaymentPropertyReport& report) {
  json violations = json::array();
  for (const PaymentConditionViolation& v : report.violations) {
    json entry{{"condition", v.condition},
               {"winnerTheta", v.winner_theta},
               {"thetaBar", v.theta_bar},
               {"margin", v.margin}};
    if (v.gamma) {
      entry["gamma"] = *v.gamma;
    } else {
      entry["gamma"] = nullptr;
    }
    violations.push_back(std::move(entry));
  }
  json j{{"condition1Holds", report.condition1_holds},
         {"condition2Holds", report.condition2_holds},
         {"passed", report.passed()},
         {"tolerance", report.tolerance},
         {"thetaGrid", grid_json(report.theta_grid)},
         {"gammaGrid", grid_json(report.gamma_grid)},
         {"violations", std::move(violations)}};
  return j.dump(2) + "\n";
}

std::string search_result_json(const SearchResult& result, Property property) {
  json j{{"property", to_string(property)},
         {"conclusive", result.conclusive},
         {"found", result.witness.has_value()},
         {"evaluations", result.evaluations}};
  j["witness"] = result.witness ? witness_json(*result.witness) : json(nullptr);
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace pasim
