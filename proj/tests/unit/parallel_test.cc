// Copyright 2026 The EIDI Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eidi/parallel.h"

#include <stdexcept>

#include "gtest/gtest.h"

namespace eidi {
namespace {

TEST(OrderedParallelForTest, SinkSeesIndexOrder) {
  for (std::size_t threads : {1u, 3u, 16u}) {
    std::vector<std::size_t> seen;
    OrderedParallelFor(
        100, threads, [](std::size_t i) { return i * i; },
        [&](std::size_t i, std::size_t v) {
          EXPECT_EQ(v, i * i);
          seen.push_back(i);
        });
    ASSERT_EQ(seen.size(), 100u);
    for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], i);
  }
}

TEST(OrderedParallelForTest, RethrowsWorkerFailure) {
  std::size_t emitted = 0;
  EXPECT_THROW(OrderedParallelFor(
                   50, 4,
                   [](std::size_t i) -> int {
                     if (i == 10) throw std::runtime_error("boom");
                     return 0;
                   },
                   [&](std::size_t, int) { ++emitted; }),
               std::runtime_error);
  EXPECT_LE(emitted, 10u);
}

TEST(OrderedParallelForTest, EmptyRange) {
  OrderedParallelFor(
      0, 4, [](std::size_t) { return 0; },
      [](std::size_t, int) { FAIL(); });
}

}  // namespace
}  // namespace eidi
