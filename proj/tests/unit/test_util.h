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

#ifndef EIDI_TESTS_UNIT_TEST_UTIL_H_
#define EIDI_TESTS_UNIT_TEST_UTIL_H_

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eidi/eval.h"
#include "eidi/llm.h"

namespace eidi::testing {

// Backend answering from a callback.
class ScriptedBackend : public Backend {
 public:
  using Handler = std::function<ChatResponse(const ChatRequest&)>;
  explicit ScriptedBackend(Handler handler) : handler_(std::move(handler)) {}
  ChatResponse Complete(const ChatRequest& request) override {
    ++calls_;
    return handler_(request);
  }
  std::string Describe() const override { return "scripted"; }
  std::size_t calls() const { return calls_; }

 private:
  Handler handler_;
  std::atomic<std::size_t> calls_{0};
};

// Single answer token with a two-way distribution.
inline ChatResponse McqResponse(const std::string& mark, double p) {
  const std::string other = mark == "A" ? "B" : "A";
  ChatResponse response;
  response.text = mark + ") " + (mark == "A" ? "True" : "False");
  TokenProb token{mark, p, {{mark, p}, {other, 1.0 - p}}};
  if (p < 0.5) std::swap(token.alternatives[0], token.alternatives[1]);
  response.tokens = {token, {")", 1.0, {}}};
  return response;
}

inline ScoredDataset MakeData(const std::vector<std::pair<double, bool>>& rows) {
  ScoredDataset data;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    data.pairs.push_back({std::to_string(i + 1), rows[i].first, rows[i].second});
  }
  return data;
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("eidi_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

}  // namespace eidi::testing

#endif  // EIDI_TESTS_UNIT_TEST_UTIL_H_
