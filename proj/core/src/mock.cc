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

#include "eidi/mock.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>

#include "eidi/errors.h"
#include "eidi/hash.h"
#include "json_codec.h"

namespace eidi {
namespace {

using nlohmann::json;

constexpr std::string_view kQuestionSuffix = ". Is that true or false?";

bool StartsWith(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

// "a | b | c" -> Triple, or nullopt when the shape is off.
std::optional<Triple> SplitPipes(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    parts.emplace_back(Trim(text.substr(
        start, bar == std::string_view::npos ? text.npos : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (parts.size() != 3) return std::nullopt;
  for (const auto& part : parts) {
    if (part.empty()) return std::nullopt;
  }
  return Triple{parts[0], parts[1], parts[2]};
}

std::string WithArticle(const std::string& type) {
  if (type.empty()) return type;
  const char first =
      static_cast<char>(std::tolower(static_cast<unsigned char>(type[0])));
  const bool vowel = std::string_view("aeiou").find(first) != std::string::npos;
  return (vowel ? "an " : "a ") + type;
}

ChatResponse PlainResponse(std::string text, bool want_token_probs) {
  ChatResponse response;
  response.text = std::move(text);
  if (want_token_probs) response.tokens.push_back({response.text, 1.0, {}});
  return response;
}

}  // namespace

std::string CanonicalSentence(std::string_view sentence) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : sentence) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::string CanonicalFact(const Triple& triple) {
  return CanonicalSentence(triple.subject + " " + triple.predicate + " " +
                           triple.object);
}

std::string MockWorldToJson(const MockWorld& world) {
  json facts = json::array();
  for (const auto& fact : world.attested_facts) {
    facts.push_back(internal::ToJson(fact));
  }
  json typing = json::array();
  for (const auto& [triple, types] : world.typing_table) {
    typing.push_back({{"triple", internal::ToJson(triple)},
                      {"types", {types.first, types.second}}});
  }
  json alternatives = json::array();
  for (const auto& [premise, alts] : world.alternatives_table) {
    json list = json::array();
    for (const auto& alt : alts) list.push_back(internal::ToJson(alt));
    alternatives.push_back(
        {{"premise", internal::ToJson(premise)}, {"alternatives", list}});
  }
  json j;
  j["attested_facts"] = facts;
  j["typing_table"] = typing;
  j["alternatives_table"] = alternatives;
  j["default_types"] = {world.default_types.first, world.default_types.second};
  j["noise_seed"] = world.noise_seed;
  j["bias"] = world.bias;
  j["jitter"] = world.jitter;
  j["supports_token_probs"] = world.supports_token_probs;
  return j.dump(1);
}

MockWorld MockWorldFromJson(const std::string& text) {
  try {
    const auto j = json::parse(text);
    MockWorld world;
    for (const auto& fact : j.at("attested_facts")) {
      world.attested_facts.insert(internal::TripleFrom(fact));
    }
    for (const auto& row : j.at("typing_table")) {
      const auto& types = row.at("types");
      world.typing_table[internal::TripleFrom(row.at("triple"))] = {
          types.at(0).get<std::string>(), types.at(1).get<std::string>()};
    }
    for (const auto& row : j.at("alternatives_table")) {
      auto& list = world.alternatives_table[internal::TripleFrom(
          row.at("premise"))];
      for (const auto& alt : row.at("alternatives")) {
        list.push_back(internal::TripleFrom(alt));
      }
    }
    if (j.contains("default_types")) {
      world.default_types = {j["default_types"].at(0).get<std::string>(),
                             j["default_types"].at(1).get<std::string>()};
    }
    world.noise_seed = j.value("noise_seed", std::uint64_t{0});
    world.bias = j.value("bias", 0.95);
    world.jitter = j.value("jitter", 0.02);
    world.supports_token_probs = j.value("supports_token_probs", true);
    if (!(world.bias >= 0.0 && world.bias <= 1.0) || !(world.jitter >= 0.0)) {
      throw ParseError("mock world bias must be in [0,1], jitter >= 0");
    }
    return world;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad mock world JSON: ") + e.what());
  }
}

MockWorld LoadMockWorld(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return MockWorldFromJson(std::string((std::istreambuf_iterator<char>(in)),
                                       std::istreambuf_iterator<char>()));
}

void SaveMockWorld(const MockWorld& world, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << MockWorldToJson(world) << '\n';
  if (!out) throw Error("cannot write " + path.string());
}

MockBackend::MockBackend(MockWorld world) : world_(std::move(world)) {
  for (const auto& fact : world_.attested_facts) {
    attested_sentences_.insert(CanonicalFact(fact));
  }
}

double MockBackend::AnswerProbability(std::string_view user_prompt) const {
  std::uint64_t state = world_.noise_seed ^ Fnv1a64(user_prompt);
  const double u = ToUnitInterval(SplitMix64(state));
  const double p = world_.bias + world_.jitter * (2.0 * u - 1.0);
  return std::clamp(p, 0.0, 1.0);
}

ChatResponse MockBackend::Complete(const ChatRequest& request) {
  ValidateRequest(request);
  ++calls_;
  if (request.want_token_probs && !world_.supports_token_probs) {
    throw CapabilityError("mock backend configured without token probabilities");
  }
  const std::string_view prompt = request.user_prompt;
  if (StartsWith(prompt, "Type the entities")) return AnswerTyping(request);
  if (StartsWith(prompt, "Write ")) return AnswerTransformation(request);

  const auto first_line = Lines(prompt).front();
  if (StartsWith(first_line, "Question:If ")) {
    const auto then = first_line.rfind(", then ");
    const auto end = first_line.rfind(kQuestionSuffix);
    if (then != std::string_view::npos && end != std::string_view::npos &&
        end > then) {
      return AnswerQuestion(request,
                            first_line.substr(then + 7, end - then - 7));
    }
  } else if (StartsWith(first_line, "Question: ")) {
    const auto end = first_line.rfind(kQuestionSuffix);
    if (end != std::string_view::npos && end >= 10) {
      return AnswerQuestion(request, first_line.substr(10, end - 10));
    }
  }
  return PlainResponse("I cannot answer that.", request.want_token_probs);
}

ChatResponse MockBackend::AnswerTyping(const ChatRequest& request) const {
  std::string_view last = Lines(request.user_prompt).back();
  last = Trim(last);
  if (last.size() >= 2 && last.substr(last.size() - 2) == "->") {
    last.remove_suffix(2);
  }
  const auto triple = SplitPipes(last);
  if (!triple) return PlainResponse("unknown", request.want_token_probs);
  auto types = world_.default_types;
  if (const auto it = world_.typing_table.find(*triple);
      it != world_.typing_table.end()) {
    types = it->second;
  }
  return PlainResponse(" " + WithArticle(types.first) + " | " +
                           triple->predicate + " | " +
                           WithArticle(types.second),
                       request.want_token_probs);
}

ChatResponse MockBackend::AnswerTransformation(
    const ChatRequest& request) const {
  const auto lines = Lines(request.user_prompt);
  std::size_t requested = 0;
  {
    const std::string_view head = lines.front().substr(6);
    std::size_t i = 0;
    while (i < head.size() && std::isdigit(static_cast<unsigned char>(head[i]))) {
      requested = requested * 10 + static_cast<std::size_t>(head[i] - '0');
      ++i;
    }
  }
  if (lines.size() < 2 || requested < 2) {
    return PlainResponse("", request.want_token_probs);
  }
  std::string_view example = Trim(lines[1]);
  if (StartsWith(example, "-")) example = Trim(example.substr(1));
  if (!example.empty() && example.back() == '.') example.remove_suffix(1);
  const auto premise = SplitPipes(example);
  if (!premise) return PlainResponse("", request.want_token_probs);
  const auto it = world_.alternatives_table.find(*premise);
  if (it == world_.alternatives_table.end()) {
    return PlainResponse("", request.want_token_probs);
  }
  // The example in the prompt counts as the first of the requested facts.
  const std::size_t count = std::min(requested - 1, it->second.size());
  std::string text;
  for (std::size_t i = 0; i < count; ++i) {
    const Triple& alt = it->second[i];
    text += (i == 0 ? " " : "\n- ") + alt.subject + " | " + alt.predicate +
            " | " + alt.object + ".";
  }
  return PlainResponse(text, request.want_token_probs);
}

ChatResponse MockBackend::AnswerQuestion(const ChatRequest& request,
                                         std::string_view clause) const {
  const bool attested =
      attested_sentences_.contains(CanonicalSentence(clause));
  const double p = AnswerProbability(request.user_prompt);
  const std::string chosen = attested ? "A" : "B";
  const std::string other = attested ? "B" : "A";
  ChatResponse response;
  response.text = chosen + (attested ? ") True" : ") False");
  if (request.want_token_probs) {
    TokenProb first{chosen, p, {{chosen, p}, {other, 1.0 - p}}};
    std::stable_sort(first.alternatives.begin(), first.alternatives.end(),
                     [](const TokenAlternative& a, const TokenAlternative& b) {
                       return a.probability > b.probability;
                     });
    response.tokens.push_back(std::move(first));
    response.tokens.push_back({")", 1.0, {}});
    response.tokens.push_back({attested ? " True" : " False", 1.0, {}});
  }
  return response;
}

}  // namespace eidi
