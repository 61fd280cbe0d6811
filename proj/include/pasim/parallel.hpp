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

#include <algorithm>
#include <cstddef>
#include <future>
#include <utility>
#include <vector>

namespace pasim {

/// Splits [0, n) into at most `workers` contiguous chunks, runs
/// `fn(begin, end) -> std::vector<T>` on each, and concatenates the results
/// in chunk order. Output is identical to the single-threaded run for any
/// worker count, which is what keeps reports byte-stable.
template <typename T, typename Fn>
std::vector<T> parallel_collect(std::size_t n, int workers, Fn&& fn) {
  if (n == 0) return {};
  const std::size_t chunks =
      std::min<std::size_t>(workers < 1 ? 1 : static_cast<std::size_t>(workers), n);
  if (chunks <= 1) return fn(std::size_t{0}, n);

  std::vector<std::future<std::vector<T>>> parts;
  parts.reserve(chunks);
  const std::size_t base = n / chunks;
  const std::size_t extra = n % chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t end = begin + base + (c < extra ? 1 : 0);
    parts.push_back(std::async(std::launch::async,
                               [&fn, begin, end] { return fn(begin, end); }));
    begin = end;
  }

  std::vector<T> out;
  for (auto& part : parts) {
    auto chunk = part.get();
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
  return out;
}

}  // namespace pasim
