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

#ifndef EIDI_SRC_JSON_CODEC_H_
#define EIDI_SRC_JSON_CODEC_H_

// JSON encodings of domain values. Private to eidi_core; public headers
// expose string-based APIs only.

#include <string>

#include "eidi/llm.h"
#include "eidi/types.h"
#include "json.hpp"

namespace eidi::internal {

using nlohmann::json;

inline json ToJson(const Triple& t) {
  return json::array({t.subject, t.predicate, t.object});
}

inline Triple TripleFrom(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw json::type_error::create(302, "triple must be a 3-element array",
                                   &j);
  }
  return {j[0].get<std::string>(), j[1].get<std::string>(),
          j[2].get<std::string>()};
}

inline json ToJson(const ChatRequest& r) {
  json j;
  j["max_new_tokens"] = r.max_new_tokens;
  j["model_name"] = r.model_name;
  j["system_instruction"] =
      r.system_instruction ? json(*r.system_instruction) : json(nullptr);
  j["temperature"] = r.temperature;
  j["user_prompt"] = r.user_prompt;
  j["want_token_probs"] = r.want_token_probs;
  return j;
}

inline ChatRequest RequestFrom(const json& j) {
  ChatRequest r;
  r.max_new_tokens = j.at("max_new_tokens").get<int>();
  r.model_name = j.at("model_name").get<std::string>();
  if (!j.at("system_instruction").is_null()) {
    r.system_instruction = j.at("system_instruction").get<std::string>();
  }
  r.temperature = j.at("temperature").get<double>();
  r.user_prompt = j.at("user_prompt").get<std::string>();
  r.want_token_probs = j.at("want_token_probs").get<bool>();
  return r;
}

inline json ToJson(const ChatResponse& r) {
  json tokens = json::array();
  for (const auto& t : r.tokens) {
    json alts = json::array();
    for (const auto& a : t.alternatives) {
      alts.push_back({{"p", a.probability}, {"text", a.text}});
    }
    tokens.push_back({{"alternatives", alts}, {"p", t.probability},
                      {"text", t.text}});
  }
  return {{"text", r.text}, {"tokens", tokens}};
}

inline ChatResponse ResponseFrom(const json& j) {
  ChatResponse r;
  r.text = j.at("text").get<std::string>();
  for (const auto& t : j.at("tokens")) {
    TokenProb token;
    token.text = t.at("text").get<std::string>();
    token.probability = t.at("p").get<double>();
    for (const auto& a : t.at("alternatives")) {
      token.alternatives.push_back(
          {a.at("text").get<std::string>(), a.at("p").get<double>()});
    }
    r.tokens.push_back(std::move(token));
  }
  return r;
}

}  // namespace eidi::internal

#endif  // EIDI_SRC_JSON_CODEC_H_
