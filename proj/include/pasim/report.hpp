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

#include <string>
#include <vector>

#include "pasim/engine.hpp"
#include "pasim/mechanism.hpp"
#include "pasim/verify.hpp"

namespace pasim {

/// Renders with 12 significant digits ("%.12g"); all CSV numbers go through
/// this so identical runs produce identical bytes.
std::string format_real(double value);

// Outcome tables. The CSV columns are fixed:
//   seed, winner_id, theta_bar, gamma_realized, payment_w, utility_w,
//   principal_utility, social_welfare, pi_star, welfare_gap
// JSON carries the same rows plus the per-agent detail (bids, payments,
// utilities) that the flat table has no room for.
std::string outcome_csv(const std::vector<SeedResult>& rows);
std::string outcome_json(const std::vector<SeedResult>& rows);

std::string verification_csv(const VerificationReport& report);
std::string verification_json(const VerificationReport& report);

std::string payment_report_csv(const PaymentPropertyReport& report);
std::string payment_report_json(const PaymentPropertyReport& report);

std::string search_result_json(const SearchResult& result, Property property);

/// Writes atomically enough for our purposes; unwritable paths raise Error.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pasim
