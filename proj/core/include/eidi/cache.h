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

#ifndef EIDI_CACHE_H_
#define EIDI_CACHE_H_

#include <atomic>
#include <filesystem>
#include <memory>

#include "eidi/llm.h"

namespace eidi {

// Persistent response cache in front of another backend.
//
// Layout: <dir>/<first 2 hex of digest>/<digest>.json, one canonical JSON
// record {"key", "request", "response"} per file. Writes go to a temporary
// file that is then renamed, so concurrent writers of one key are safe.
// A record that cannot be decoded is treated as a miss and logged.
class CachedBackend : public Backend {
 public:
  CachedBackend(std::shared_ptr<Backend> inner, std::filesystem::path dir);

  ChatResponse Complete(const ChatRequest& request) override;
  std::string Describe() const override;

  ChatResponse GetOrFetch(const CacheKey& key, const ChatRequest& request);

  std::filesystem::path PathFor(const CacheKey& key) const;

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::shared_ptr<Backend> inner_;
  std::filesystem::path dir_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
  std::atomic<std::uint64_t> temp_counter_{0};
};

}  // namespace eidi

#endif  // EIDI_CACHE_H_
