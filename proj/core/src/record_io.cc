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

#include "eidi/record_io.h"

#include <fstream>
#include <iterator>

#include "eidi/errors.h"
#include "eidi/prompts.h"
#include "json_codec.h"

namespace eidi {
namespace {

using nlohmann::json;
using internal::ToJson;
using internal::TripleFrom;

json PrefixJson(const PrefixSize& k) { return k ? json(*k) : json("all"); }

PrefixSize PrefixFrom(const json& j) {
  if (j.is_string() && j.get<std::string>() == "all") return std::nullopt;
  return j.get<std::size_t>();
}

json ConfigJson(const PipelineConfig& c) {
  json j;
  j["n_alternatives"] = c.n_alternatives;
  j["k"] = PrefixJson(c.k);
  j["score_rule"] = std::string(ToString(c.score_rule));
  j["fallback_to_original"] = c.fallback_to_original;
  j["use_instruction"] = c.use_instruction;
  j["attest"] = c.attest;
  j["model_name"] = c.model_name;
  j["typing_max_tokens"] = c.typing_max_tokens;
  j["tokens_per_fact"] = c.tokens_per_fact;
  j["prediction_max_tokens"] = c.prediction_max_tokens;
  return j;
}

PipelineConfig ConfigFrom(const json& j) {
  PipelineConfig c;
  c.n_alternatives = j.at("n_alternatives").get<std::size_t>();
  c.k = PrefixFrom(j.at("k"));
  c.score_rule = ParseScoreRule(j.at("score_rule").get<std::string>());
  c.fallback_to_original = j.at("fallback_to_original").get<bool>();
  c.use_instruction = j.at("use_instruction").get<bool>();
  c.attest = j.at("attest").get<bool>();
  c.model_name = j.at("model_name").get<std::string>();
  c.typing_max_tokens = j.at("typing_max_tokens").get<int>();
  c.tokens_per_fact = j.at("tokens_per_fact").get<int>();
  c.prediction_max_tokens = j.at("prediction_max_tokens").get<int>();
  return c;
}

}  // namespace

std::string RecordToJsonLine(const RunRecord& r) {
  json j;
  j["entry_id"] = r.entry_id;
  j["method"] = r.method;
  if (r.typed) {
    j["typed"] = {{"subject_type", r.typed->subject_type},
                  {"object_type", r.typed->object_type},
                  {"base", ToJson(r.typed->base)}};
  } else {
    j["typed"] = nullptr;
  }
  json alternatives = json::array();
  for (const auto& alt : r.alternatives) alternatives.push_back(ToJson(alt));
  j["alternatives"] = alternatives;
  json scored = json::array();
  for (const auto& s : r.scored) {
    json item;
    item["premise"] = ToJson(s.inquiry.premise);
    item["hypothesis"] = ToJson(s.inquiry.hypothesis);
    item["score"] = s.score;
    item["answer_token"] = s.answer_token;
    item["source"] = s.source == ScoreSource::kDirect ? "direct" : "alternative";
    if (s.source == ScoreSource::kAlternative) item["index"] = s.alternative_index;
    scored.push_back(item);
  }
  j["scored"] = scored;
  j["k"] = PrefixJson(r.k);
  j["aggregate"] = r.aggregate;
  j["attested_hypothesis"] =
      r.attested_hypothesis ? json(*r.attested_hypothesis) : json(nullptr);
  j["flags"] = r.flags;
  j["skipped"] = r.skipped;
  return j.dump();
}

RunRecord RecordFromJsonLine(std::string_view line) {
  try {
    const auto j = json::parse(line);
    RunRecord r;
    r.entry_id = j.at("entry_id").get<std::string>();
    r.method = j.at("method").get<std::string>();
    if (!j.at("typed").is_null()) {
      const auto& t = j["typed"];
      r.typed = TypedPremise{TripleFrom(t.at("base")),
                             t.at("subject_type").get<std::string>(),
                             t.at("object_type").get<std::string>()};
    }
    for (const auto& alt : j.at("alternatives")) {
      r.alternatives.push_back(TripleFrom(alt));
    }
    for (const auto& item : j.at("scored")) {
      ScoredInquiry s;
      s.inquiry = {TripleFrom(item.at("premise")),
                   TripleFrom(item.at("hypothesis"))};
      s.score = item.at("score").get<double>();
      s.answer_token = item.at("answer_token").get<std::string>();
      const auto source = item.at("source").get<std::string>();
      if (source == "alternative") {
        s.source = ScoreSource::kAlternative;
        s.alternative_index = item.at("index").get<std::size_t>();
      } else if (source != "direct") {
        throw ParseError("unknown score source '" + source + "'");
      }
      r.scored.push_back(std::move(s));
    }
    r.k = PrefixFrom(j.at("k"));
    r.aggregate = j.at("aggregate").get<double>();
    if (!j.at("attested_hypothesis").is_null()) {
      r.attested_hypothesis = j["attested_hypothesis"].get<bool>();
    }
    r.flags = j.at("flags").get<std::vector<std::string>>();
    r.skipped = j.at("skipped").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad run record: ") + e.what());
  }
}

std::vector<RunRecord> ReadRecords(const std::filesystem::path& path) {
  std::vector<RunRecord> records;
  std::ifstream in(path, std::ios::binary);
  if (!in) return records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      records.push_back(RecordFromJsonLine(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what(), line_no);
    }
  }
  return records;
}

std::string ManifestToJson(const RunManifest& m) {
  json j;
  j["run_id"] = m.run_id;
  j["method"] = std::string(ToString(m.method));
  j["config"] = ConfigJson(m.config);
  j["model_name"] = m.model_name;
  j["dataset_path"] = m.dataset_path;
  j["dataset_digest"] = m.dataset_digest;
  j["entry_count"] = m.entry_count;
  j["template_hashes"] = m.template_hashes;
  j["backend"] = m.backend;
  j["started"] = m.started;
  j["finished"] = m.finished ? json(*m.finished) : json(nullptr);
  return j.dump(2) + "\n";
}

RunManifest ManifestFromJson(const std::string& text) {
  try {
    const auto j = json::parse(text);
    RunManifest m;
    m.run_id = j.at("run_id").get<std::string>();
    m.method = ParseMethod(j.at("method").get<std::string>());
    m.config = ConfigFrom(j.at("config"));
    m.model_name = j.at("model_name").get<std::string>();
    m.dataset_path = j.at("dataset_path").get<std::string>();
    m.dataset_digest = j.at("dataset_digest").get<std::string>();
    m.entry_count = j.at("entry_count").get<std::size_t>();
    m.template_hashes =
        j.at("template_hashes").get<std::map<std::string, std::string>>();
    m.backend = j.at("backend").get<std::string>();
    m.started = j.at("started").get<std::string>();
    if (!j.at("finished").is_null()) m.finished = j["finished"].get<std::string>();
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad manifest: ") + e.what());
  }
}

RunManifest ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return ManifestFromJson(std::string((std::istreambuf_iterator<char>(in)),
                                      std::istreambuf_iterator<char>()));
}

void WriteManifest(const RunManifest& manifest,
                   const std::filesystem::path& path) {
  const auto temp = path.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << ManifestToJson(manifest);
    if (!out) throw Error("cannot write " + temp);
  }
  std::filesystem::rename(temp, path);
}

std::map<std::string, std::string> AllTemplateHashes() {
  std::map<std::string, std::string> hashes;
  for (auto name : {TemplateName::kTyping, TemplateName::kTransformation,
                    TemplateName::kPrediction, TemplateName::kAttestation}) {
    hashes[std::string(ToString(name))] = TemplateHash(name);
  }
  return hashes;
}

}  // namespace eidi
