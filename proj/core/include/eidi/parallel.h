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

#ifndef EIDI_PARALLEL_H_
#define EIDI_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace eidi {

// Runs work(i) for i in [0, count) on up to `max_in_flight` threads and hands
// each result to sink(i, result) strictly in index order from one thread at a
// time, regardless of completion order. An exception thrown by `work` or
// `sink` stops scheduling new items and is rethrown after the workers join.
template <typename Work, typename Sink>
void OrderedParallelFor(std::size_t count, std::size_t max_in_flight,
                        Work work, Sink sink) {
  using Result = decltype(work(std::size_t{0}));
  max_in_flight = std::max<std::size_t>(1, std::min(max_in_flight, count));

  std::mutex mu;
  std::map<std::size_t, Result> ready;
  std::size_t next_to_emit = 0;
  std::atomic<std::size_t> next_to_start{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;

  auto record_failure = [&](std::exception_ptr e) {
    std::lock_guard<std::mutex> lock(mu);
    if (!failure) failure = e;
    stop = true;
  };

  auto worker = [&] {
    while (!stop) {
      const std::size_t i = next_to_start.fetch_add(1);
      if (i >= count) return;
      std::optional<Result> result;
      try {
        result.emplace(work(i));
      } catch (...) {
        record_failure(std::current_exception());
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      ready.emplace(i, std::move(*result));
      try {
        while (!ready.empty() && ready.begin()->first == next_to_emit) {
          auto node = ready.extract(ready.begin());
          sink(node.key(), std::move(node.mapped()));
          ++next_to_emit;
        }
      } catch (...) {
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
    }
  };

  if (max_in_flight == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(max_in_flight);
    for (std::size_t t = 0; t < max_in_flight; ++t) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace eidi

#endif  // EIDI_PARALLEL_H_
