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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Thresholds are fixed below.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "eidi/dataset.h"
#include "eidi/eval.h"
#include "eidi/mock.h"
#include "eidi/pipeline.h"
#include "eidi/prompts.h"
#include "eidi/world.h"
#include "oracle/auc_oracle.h"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kOracleTolerance = 1e-12;
constexpr double kOracleTimeLimitSeconds = 10.0;
constexpr int kOracleDatasets = 1000;
constexpr int kRankDatasets = 100;
constexpr double kRankTolerance = 1e-12;
constexpr std::size_t kMechanismEntries = 400;
constexpr double kMechanismAdversarialCeiling = 0.05;
constexpr double kMechanismMinGain = 0.10;
constexpr double kMechanismMinShrink = 0.20;
constexpr double kMechanismTimeLimitSeconds = 60.0;
constexpr int kSweepWorlds = 20;
constexpr int kSweepRequiredMonotone = 18;  // 90% of 20
constexpr std::size_t kSweepEntries = 1000;
constexpr std::size_t kSweepMaxI = 10;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

eidi::ScoredDataset ToDataset(const std::vector<std::pair<double, bool>>& rows) {
  eidi::ScoredDataset data;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    data.pairs.push_back({std::to_string(i), rows[i].first, rows[i].second});
  }
  return data;
}

// Random dataset with both classes. Half the datasets use a coarse score
// grid so that ties are frequent.
std::vector<std::pair<double, bool>> RandomRows(std::mt19937_64& rng, int min_size,
                                                int max_size) {
  std::uniform_int_distribution<int> size_dist(min_size, max_size);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = size_dist(rng);
  const double prior = 0.05 + 0.9 * unit(rng);
  const bool coarse = rng() % 2 == 0;
  std::vector<std::pair<double, bool>> rows;
  for (int i = 0; i < n; ++i) {
    const double score = coarse ? static_cast<double>(rng() % 11) / 10.0 : unit(rng);
    rows.emplace_back(score, unit(rng) < prior);
  }
  const std::size_t pos = rng() % n;
  rows[pos].second = true;
  rows[(pos + 1) % n].second = false;
  return rows;
}

Outcome MetricOracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int t = 0; t < kOracleDatasets; ++t) {
    const auto rows = RandomRows(rng, 4, 64);
    const double diff =
        std::abs(eidi::AucNorm(ToDataset(rows)) - eidi::oracle::BruteForceAucNorm(rows));
    worst = std::max(worst, diff);
  }
  const double elapsed = Seconds(start);
  return {worst <= kOracleTolerance && elapsed < kOracleTimeLimitSeconds,
          std::to_string(kOracleDatasets) + " datasets, max |diff| " +
              Fmt("%.3g", worst) + ", " + Fmt("%.2f", elapsed) + " s"};
}

Outcome RankInvariance() {
  const std::vector<std::function<double(double)>> transforms = {
      [](double x) { return x * x; },
      [](double x) { return std::sqrt(x); },
      [](double x) { return std::expm1(x) / std::expm1(1.0); },
      [](double x) { return 0.25 + 0.5 * x; },
      [](double x) { return std::log1p(9.0 * x) / std::log(10.0); },
  };
  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int t = 0; t < kRankDatasets; ++t) {
    auto rows = RandomRows(rng, 4, 64);
    // Scores on a 1/1000 grid stay distinct under every transform.
    for (auto& r : rows) r.first = std::round(r.first * 1000.0) / 1000.0;
    const double base = eidi::AucNorm(ToDataset(rows));
    for (const auto& f : transforms) {
      auto mapped = rows;
      for (auto& r : mapped) r.first = std::clamp(f(r.first), 0.0, 1.0);
      worst = std::max(worst, std::abs(eidi::AucNorm(ToDataset(mapped)) - base));
    }
  }
  return {worst <= kRankTolerance,
          std::to_string(kRankDatasets) + " datasets x " +
              std::to_string(transforms.size()) + " transforms, max |diff| " +
              Fmt("%.3g", worst)};
}

Outcome Anchors() {
  std::mt19937_64 rng(5);
  int checked = 0;
  bool ok = true;
  for (int t = 0; t < 50; ++t) {
    const int positives = 1 + static_cast<int>(rng() % 20);
    const int negatives = 1 + static_cast<int>(rng() % 20);
    std::vector<std::pair<double, bool>> perfect, constant;
    for (int i = 0; i < positives; ++i) {
      perfect.emplace_back(0.5 + 0.5 * (i + 1) / (positives + 1.0), true);
      constant.emplace_back(0.3, true);
    }
    for (int i = 0; i < negatives; ++i) {
      perfect.emplace_back(0.5 * i / negatives, false);
      constant.emplace_back(0.3, false);
    }
    ok &= eidi::AucNorm(ToDataset(perfect)) == 1.0;
    ok &= eidi::AucNorm(ToDataset(constant)) == 0.0;
    checked += 2;
  }
  return {ok, std::to_string(checked) + " datasets, exact equality"};
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome PromptFidelity() {
  const fs::path dir = fs::path(EIDI_TESTDATA_DIR) / "prompts";
  const eidi::Triple premise{"Obama", "was born in", "Hawaii"};
  eidi::EntailmentEntry aligned;
  aligned.id = "1";
  aligned.premise = premise;
  aligned.hypothesis = {"Obama", "is from", "Hawaii"};
  eidi::EntailmentEntry swapped = aligned;
  swapped.order = eidi::ArgOrder::kSwapped;
  swapped.hypothesis = {"Hawaii", "is the birthplace of", "Obama"};

  const std::map<std::string, std::string> rendered = {
      {"typing.txt", eidi::RenderTypingPrompt(premise)},
      {"transformation.txt",
       eidi::RenderTransformationPrompt({premise, "a person", "a place"}, 10)},
      {"prediction.txt", eidi::RenderPredictionPrompt(eidi::OriginalInquiry(aligned))},
      {"prediction_swapped.txt",
       eidi::RenderPredictionPrompt(eidi::OriginalInquiry(swapped))},
      {"instruction.txt", std::string(eidi::kPredictionInstruction)},
  };
  std::string mismatched;
  for (const auto& [file, text] : rendered) {
    if (!fs::exists(dir / file) || ReadFile(dir / file) != text) {
      mismatched += " " + file;
    }
  }
  return {mismatched.empty(), mismatched.empty()
                                  ? std::to_string(rendered.size()) +
                                        " prompts byte-equal to references"
                                  : "mismatch:" + mismatched};
}

struct MethodScores {
  eidi::ScoredDataset data;
  std::vector<eidi::RunRecord> records;
};

MethodScores RunAll(eidi::Method method, const eidi::Dataset& dataset,
                    eidi::Backend& backend, const eidi::PipelineConfig& config) {
  MethodScores out;
  for (const auto& entry : dataset.entries) {
    out.records.push_back(eidi::RunMethod(method, entry, config, backend));
  }
  out.data = eidi::FromRecords(out.records, eidi::GoldLabels(dataset));
  return out;
}

Outcome Mechanism() {
  const auto start = Clock::now();
  eidi::WorldParams params;
  params.entries = kMechanismEntries;
  params.seed = 17;
  const eidi::Scenario scenario = eidi::GenerateWorld(params);
  eidi::MockBackend backend(scenario.world);
  eidi::PipelineConfig config;

  std::map<std::string, bool> attested;
  for (const auto& entry : scenario.dataset.entries) {
    attested[entry.id] = eidi::AttestHypothesis(entry, backend, config);
  }
  const eidi::SplitPair split =
      eidi::ComputeAttestationSplit(scenario.dataset, attested);

  const auto entity = RunAll(eidi::Method::kEntity, scenario.dataset, backend, config);
  const auto eidi_all = RunAll(eidi::Method::kEidi, scenario.dataset, backend, config);
  const double entity_overall = eidi::AucNorm(entity.data);
  const double eidi_overall = eidi::AucNorm(eidi_all.data);
  const auto entity_split = eidi::MakeSplitReport(entity.data, split);
  const auto eidi_split = eidi::MakeSplitReport(eidi_all.data, split);
  const double elapsed = Seconds(start);

  if (!entity_split.adversarial.auc_norm || !entity_split.diff || !eidi_split.diff) {
    return {false, "split AUC not computable"};
  }
  const double adv = *entity_split.adversarial.auc_norm;
  const double entity_gap = std::abs(*entity_split.diff);
  const double eidi_gap = std::abs(*eidi_split.diff);
  const bool a = adv < kMechanismAdversarialCeiling;
  const bool b = eidi_overall - entity_overall >= kMechanismMinGain;
  const bool c = eidi_gap <= (1.0 - kMechanismMinShrink) * entity_gap;
  const bool timely = elapsed < kMechanismTimeLimitSeconds;
  return {a && b && c && timely,
          std::to_string(params.entries) + " entries; (a) MCQ_entity adv " +
              Fmt("%.2f%%", 100 * adv) + (a ? " ok" : " FAIL") +
              "; (b) EIDI_all " + Fmt("%.2f%%", 100 * eidi_overall) +
              " vs MCQ_entity " + Fmt("%.2f%%", 100 * entity_overall) +
              (b ? " ok" : " FAIL") + "; (c) |diff| " +
              Fmt("%.2f", 100 * entity_gap) + " -> " + Fmt("%.2f", 100 * eidi_gap) +
              (c ? " ok" : " FAIL") + "; " + Fmt("%.2f", elapsed) + " s"};
}

Outcome SweepMonotone() {
  int monotone = 0;
  std::string failures;
  for (int seed = 1; seed <= kSweepWorlds; ++seed) {
    eidi::WorldParams params;
    params.entries = kSweepEntries;
    params.alt_attested_if_entailed = 0.7;
    params.alt_attested_if_not = 0.3;
    params.attestation_coupling = 0.0;
    params.seed = static_cast<std::uint64_t>(1000 + seed);
    const eidi::Scenario scenario = eidi::GenerateWorld(params);
    eidi::MockBackend backend(scenario.world);
    eidi::PipelineConfig config;
    const auto run = RunAll(eidi::Method::kEidi, scenario.dataset, backend, config);
    const auto rows = eidi::EidiSweep(run.records, eidi::GoldLabels(scenario.dataset));
    bool ok = rows.size() > kSweepMaxI;
    for (std::size_t i = 1; ok && i < kSweepMaxI; ++i) {
      ok = rows[i].auc_norm >= rows[i - 1].auc_norm;
    }
    if (ok) {
      ++monotone;
    } else {
      failures += " " + std::to_string(params.seed);
    }
  }
  return {monotone >= kSweepRequiredMonotone,
          std::to_string(monotone) + "/" + std::to_string(kSweepWorlds) +
              " worlds non-decreasing for i=1.." + std::to_string(kSweepMaxI) +
              (failures.empty() ? "" : "; not monotone: seeds" + failures)};
}

int Cli(std::vector<std::string> args, std::string* stdout_text = nullptr) {
  args.insert(args.begin(), "eidi");
  std::ostringstream out, err;
  const int rc = eidi::cli::Main(args, out, err);
  if (stdout_text) *stdout_text = out.str();
  return rc;
}

std::size_t BackendCalls(const std::string& summary) {
  const auto pos = summary.find("backend_calls=");
  if (pos == std::string::npos) return static_cast<std::size_t>(-1);
  return std::stoul(summary.substr(pos + 14));
}

Outcome DeterminismAndCaching() {
  const fs::path root = fs::temp_directory_path() /
                        ("eidi_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::string world = (root / "world").string();
  if (Cli({"make-world", "--dir", world, "--entries", "120", "--seed", "3"}) != 0) {
    return {false, "make-world failed"};
  }
  const std::string dataset = world + "/dataset.tsv";
  const std::string types = world + "/types.tsv";
  const std::vector<std::vector<std::string>> runs = {
      {"--method", "entity"},
      {"--method", "type", "--types", types},
      {"--method", "eidi", "--attest"},
      {"--method", "eidi", "--k", "3"},
  };

  // Pass 1 fills the cache; pass 2 repeats into a fresh output directory
  // sharing that cache; pass 3 runs uncached from scratch.
  struct Pass {
    std::string out;
    bool cached;
    std::size_t calls = 0;
    std::map<std::string, std::string> files;
  };
  std::vector<Pass> passes = {{(root / "p1").string(), true},
                              {(root / "p2").string(), true},
                              {(root / "p3").string(), false}};
  const std::string cache = (root / "cache").string();
  for (auto& pass : passes) {
    for (const auto& extra : runs) {
      std::vector<std::string> args = {"run", "--out", pass.out, "--scenario",
                                       world + "/world.json", "--dataset", dataset};
      args.insert(args.end(), extra.begin(), extra.end());
      if (pass.cached) {
        args.insert(args.end(), {"--cache-dir", cache});
      } else {
        args.push_back("--no-cache");
      }
      std::string summary;
      if (Cli(args, &summary) != 0) return {false, "run failed in " + pass.out};
      pass.calls += BackendCalls(summary);
    }
    if (Cli({"eval", "--out", pass.out, "--dataset", dataset, "--splits",
             "attestation", "--sweep"}) != 0) {
      return {false, "eval failed in " + pass.out};
    }
    for (const auto& file : fs::recursive_directory_iterator(pass.out)) {
      const auto rel = fs::relative(file.path(), pass.out).string();
      if (file.is_regular_file() && rel.find("manifest.json") == std::string::npos) {
        pass.files[rel] = ReadFile(file.path());
      }
    }
  }
  // Rerunning over complete records is a no-op.
  std::string summary;
  Cli({"run", "--out", passes[0].out, "--scenario", world + "/world.json",
       "--dataset", dataset, "--method", "eidi", "--attest", "--cache-dir", cache},
      &summary);
  const std::size_t resume_calls = BackendCalls(summary);

  fs::remove_all(root);
  const bool identical = passes[0].files == passes[1].files &&
                         passes[0].files == passes[2].files &&
                         passes[0].files.size() >= 8;
  const bool zero_calls = passes[1].calls == 0 && resume_calls == 0;
  return {identical && zero_calls && passes[0].calls > 0,
          std::to_string(passes[0].files.size()) + " record/report files " +
              (identical ? "byte-identical" : "DIFFER") +
              " across cached, cache-served and uncached passes; backend calls " +
              std::to_string(passes[0].calls) + " then " +
              std::to_string(passes[1].calls) + " (cache) and " +
              std::to_string(resume_calls) + " (resume)"};
}

Outcome SplitAlgebra() {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    eidi::Dataset dataset;
    std::map<std::string, bool> labels;
    const int n = 1 + static_cast<int>(rng() % 100);
    for (int i = 0; i < n; ++i) {
      eidi::EntailmentEntry entry;
      entry.id = std::to_string(i + 1);
      entry.premise = {"a" + entry.id, "p", "b" + entry.id};
      entry.hypothesis = {"a" + entry.id, "h", "b" + entry.id};
      entry.gold = rng() % 2 == 0;
      dataset.entries.push_back(entry);
      labels[entry.id] = rng() % 2 == 0;
    }
    const auto split = eidi::ComputeAttestationSplit(dataset, labels);
    std::set<std::string> both;
    std::set_intersection(split.consistent.member_ids.begin(),
                          split.consistent.member_ids.end(),
                          split.adversarial.member_ids.begin(),
                          split.adversarial.member_ids.end(),
                          std::inserter(both, both.end()));
    std::set<std::string> either = split.consistent.member_ids;
    either.insert(split.adversarial.member_ids.begin(),
                  split.adversarial.member_ids.end());
    if (!both.empty() || either != dataset.Ids()) {
      return {false, "dataset " + std::to_string(t) + " is not partitioned"};
    }
    for (const auto& entry : dataset.entries) {
      const bool consistent = entry.gold == labels[entry.id];
      if (split.consistent.member_ids.contains(entry.id) != consistent) {
        return {false, "entry " + entry.id + " assigned to the wrong side"};
      }
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " random datasets partitioned exactly"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"metric_oracle", MetricOracle},
      {"rank_invariance", RankInvariance},
      {"trivial_anchors", Anchors},
      {"prompt_fidelity", PromptFidelity},
      {"mechanism_reproduction", Mechanism},
      {"sweep_monotonicity", SweepMonotone},
      {"determinism_caching", DeterminismAndCaching},
      {"split_algebra", SplitAlgebra},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
    failed += outcome.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
