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

#include "eidi/openai.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "eidi/errors.h"
#include "httplib.h"
#include "json.hpp"

namespace eidi {
namespace {

using nlohmann::json;

bool Retryable(int status) { return status == 429 || status >= 500; }

double ProbabilityFromLogprob(const json& j) {
  return std::clamp(std::exp(j.at("logprob").get<double>()), 0.0, 1.0);
}

}  // namespace

std::string BuildChatCompletionBody(const ChatRequest& request,
                                    int top_logprobs) {
  json messages = json::array();
  if (request.system_instruction) {
    messages.push_back(
        {{"role", "system"}, {"content", *request.system_instruction}});
  }
  messages.push_back({{"role", "user"}, {"content", request.user_prompt}});
  json body;
  body["model"] = request.model_name;
  body["messages"] = messages;
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_new_tokens;
  if (request.want_token_probs) {
    body["logprobs"] = true;
    body["top_logprobs"] = top_logprobs;
  }
  return body.dump();
}

ChatResponse ParseChatCompletionBody(std::string_view body,
                                     bool want_token_probs) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& e) {
    throw ParseError(std::string("chat completion body is not JSON: ") +
                     e.what());
  }
  ChatResponse response;
  try {
    const auto& choice = j.at("choices").at(0);
    const auto& content = choice.at("message").at("content");
    response.text = content.is_null() ? "" : content.get<std::string>();
    if (!want_token_probs) return response;

    const auto logprobs = choice.find("logprobs");
    if (logprobs == choice.end() || logprobs->is_null() ||
        !logprobs->contains("content") || (*logprobs)["content"].is_null()) {
      throw CapabilityError("endpoint returned no token log-probabilities");
    }
    for (const auto& position : (*logprobs)["content"]) {
      TokenProb token;
      token.text = position.at("token").get<std::string>();
      token.probability = ProbabilityFromLogprob(position);
      if (const auto top = position.find("top_logprobs");
          top != position.end() && top->is_array()) {
        for (const auto& alt : *top) {
          token.alternatives.push_back(
              {alt.at("token").get<std::string>(), ProbabilityFromLogprob(alt)});
        }
        std::stable_sort(
            token.alternatives.begin(), token.alternatives.end(),
            [](const TokenAlternative& a, const TokenAlternative& b) {
              return a.probability > b.probability;
            });
      }
      response.tokens.push_back(std::move(token));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("unexpected chat completion shape: ") +
                     e.what());
  }
  return response;
}

OpenAIBackend::OpenAIBackend(OpenAIOptions options)
    : options_(std::move(options)) {
  if (options_.max_attempts < 1) {
    throw InvalidInputError("max_attempts must be at least 1");
  }
  if (!options_.sleep) {
    options_.sleep = [](std::chrono::milliseconds d) {
      std::this_thread::sleep_for(d);
    };
  }
}

std::string OpenAIBackend::Describe() const {
  return "openai:" + options_.base_url;
}

ChatResponse OpenAIBackend::Complete(const ChatRequest& request) {
  ValidateRequest(request);
  const std::string body =
      BuildChatCompletionBody(request, options_.top_logprobs);

  httplib::Client client(options_.base_url);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_write_timeout(options_.timeout);
  httplib::Headers headers;
  if (!options_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + options_.api_key);
  }

  auto backoff = options_.initial_backoff;
  for (int attempt = 1;; ++attempt) {
    auto result = client.Post(options_.path, headers, body, "application/json");
    const bool last = attempt >= options_.max_attempts;
    if (!result) {
      if (last) {
        throw TransportError("request to " + options_.base_url + " failed: " +
                                 httplib::to_string(result.error()),
                             attempt);
      }
    } else if (result->status == 200) {
      return ParseChatCompletionBody(result->body, request.want_token_probs);
    } else if (!Retryable(result->status) || last) {
      throw ApiStatusError(result->status, result->body);
    }
    options_.sleep(backoff);
    backoff *= 2;
  }
}

}  // namespace eidi
