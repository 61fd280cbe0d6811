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

namespace pasim {

/// Full command-line entry point (everything main() does apart from argv
/// shuffling), exposed so tests can drive the tool in-process.
///
/// Exit codes: 0 every checked property passed, 1 a property failed,
/// 2 usage/config/IO error, 3 counterexample search inconclusive (budget
/// exhausted before full coverage).
int run_command(const std::vector<std::string>& args);

}  // namespace pasim
