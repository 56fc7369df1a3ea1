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

#include "eidi/cache.h"

#include <unistd.h>

#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>
#include <thread>

#include "eidi/errors.h"
#include "eidi/log.h"
#include "json_codec.h"

namespace eidi {

CachedBackend::CachedBackend(std::shared_ptr<Backend> inner,
                             std::filesystem::path dir)
    : inner_(std::move(inner)), dir_(std::move(dir)) {
  if (!inner_) throw InvalidInputError("CachedBackend needs a backend");
}

std::string CachedBackend::Describe() const {
  return "cached(" + inner_->Describe() + ")";
}

std::filesystem::path CachedBackend::PathFor(const CacheKey& key) const {
  return dir_ / key.digest.substr(0, 2) / (key.digest + ".json");
}

ChatResponse CachedBackend::Complete(const ChatRequest& request) {
  return GetOrFetch(MakeCacheKey(request), request);
}

ChatResponse CachedBackend::GetOrFetch(const CacheKey& key,
                                       const ChatRequest& request) {
  const auto path = PathFor(key);
  if (std::ifstream in{path, std::ios::binary}) {
    const std::string bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    try {
      const auto record = nlohmann::json::parse(bytes);
      if (record.at("key").get<std::string>() != key.digest) {
        throw ParseError("key mismatch");
      }
      ChatResponse response = internal::ResponseFrom(record.at("response"));
      ValidateResponse(response);
      ++hits_;
      return response;
    } catch (const std::exception& e) {
      LogWarning("corrupt cache record " + path.string() + " (" + e.what() +
                 "); refetching");
    }
  }

  ++misses_;
  ChatResponse response = inner_->Complete(request);

  nlohmann::json record;
  record["key"] = key.digest;
  record["request"] = internal::ToJson(request);
  record["response"] = internal::ToJson(response);

  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error("cannot create cache directory: " + ec.message());
  std::ostringstream temp_name;
  temp_name << key.digest << ".tmp." << ::getpid() << '.'
            << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
            << temp_counter_++;
  const auto temp_path = path.parent_path() / temp_name.str();
  {
    std::ofstream out(temp_path, std::ios::binary | std::ios::trunc);
    out << record.dump() << '\n';
    if (!out) throw Error("cannot write cache file " + temp_path.string());
  }
  std::filesystem::rename(temp_path, path, ec);
  if (ec) {
    std::filesystem::remove(temp_path);
    throw Error("cannot publish cache file " + path.string() + ": " +
                ec.message());
  }
  return response;
}

}  // namespace eidi
