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
#include <vector>

namespace pasim {

/// Closed interval [lo, hi] discretized with a fixed step. The point set is
/// lo, lo+step, lo+2*step, ..., and hi is always included as the final point
/// whether or not the step divides the span evenly.
struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;

  std::vector<double> points() const;
  std::size_t point_count() const;
};

/// Throws ValidationError unless lo <= hi, step > 0 and all fields are
/// finite. `name` prefixes the error message so config errors can point at
/// the offending key.
void validate_grid(const Grid& grid, const char* name = "grid");

/// Grid points inside [0, cap], with 0 and cap themselves always present,
/// sorted ascending. `cap` is the binding bound on a realized misalignment:
/// the smaller of the initial and the reported one.
std::vector<double> feasible_gammas(const Grid& grid, double cap);

}  // namespace pasim
