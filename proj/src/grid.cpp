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

#include "pasim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pasim/errors.hpp"

namespace pasim {

namespace {
// Slack when deciding whether the step divides the span; matches the
// toolkit-wide absolute comparison tolerance.
constexpr double kSnap = 1e-9;
}  // namespace

void validate_grid(const Grid& grid, const char* name) {
  const std::string prefix(name);
  if (!std::isfinite(grid.lo) || !std::isfinite(grid.hi) || !std::isfinite(grid.step)) {
    throw ValidationError(prefix + ": bounds and step must be finite");
  }
  if (grid.lo > grid.hi) {
    throw ValidationError(prefix + ".lo must not exceed " + prefix + ".hi");
  }
  if (grid.step <= 0.0) {
    throw ValidationError(prefix + ".step must be > 0");
  }
}

std::vector<double> Grid::points() const {
  validate_grid(*this);
  std::vector<double> pts;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + kSnap));
  pts.reserve(count + 2);
  for (std::size_t i = 0; i <= count; ++i) {
    pts.push_back(lo + static_cast<double>(i) * step);
  }
  // hi is part of the grid by definition; snap the last point onto it when
  // the step lands within tolerance, append it otherwise.
  if (hi - pts.back() > kSnap) {
    pts.push_back(hi);
  } else {
    pts.back() = hi;
  }
  return pts;
}

std::size_t Grid::point_count() const { return points().size(); }

std::vector<double> feasible_gammas(const Grid& grid, double cap) {
  if (!std::isfinite(cap) || cap < 0.0) {
    throw ValidationError("feasible_gammas: cap must be finite and nonnegative");
  }
  std::vector<double> out;
  out.push_back(0.0);
  for (double p : grid.points()) {
    if (p >= 0.0 && p <= cap) out.push_back(p);
  }
  out.push_back(cap);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pasim
