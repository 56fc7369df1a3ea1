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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "eidi/cache.h"
#include "eidi/dataset.h"
#include "eidi/errors.h"
#include "eidi/eval.h"
#include "eidi/hash.h"
#include "eidi/mock.h"
#include "eidi/openai.h"
#include "eidi/parallel.h"
#include "eidi/pipeline.h"
#include "eidi/record_io.h"
#include "eidi/report.h"
#include "eidi/world.h"
#include "runner.h"

namespace eidi::cli {
namespace {

namespace fs = std::filesystem;

struct BackendOptions {
  std::string backend = "mock";
  std::string scenario;
  std::string model;
  std::string base_url = "https://api.openai.com";
  std::string api_key_env = "EIDI_API_KEY";
  std::string cache_dir;
  bool no_cache = false;
  std::size_t max_in_flight = 8;
  std::string score_rule = "distribution_a";
  bool no_instruction = false;
};

struct BackendStack {
  std::shared_ptr<CountingBackend> counter;
  std::shared_ptr<CachedBackend> cache;  // null with --no-cache
  std::shared_ptr<Backend> top;
  std::string label;
  std::string model;
};

void AddBackendOptions(CLI::App* sub, BackendOptions& o) {
  sub->add_option("--backend", o.backend, "mock or live")
      ->check(CLI::IsMember({"mock", "live"}));
  sub->add_option("--scenario", o.scenario, "Mock world JSON (mock backend)");
  sub->add_option("--model", o.model, "Model name sent to the backend");
  sub->add_option("--base-url", o.base_url, "OpenAI-compatible endpoint");
  sub->add_option("--api-key-env", o.api_key_env,
                  "Environment variable holding the API key");
  sub->add_option("--cache-dir", o.cache_dir, "Response cache (default <out>/cache)");
  sub->add_flag("--no-cache", o.no_cache, "Bypass the response cache");
  sub->add_option("--max-in-flight", o.max_in_flight,
                  "Concurrent backend requests")
      ->check(CLI::PositiveNumber);
  sub->add_option("--score-rule", o.score_rule,
                  "distribution_a or complement_fallback")
      ->check(CLI::IsMember({"distribution_a", "complement_fallback"}));
  sub->add_flag("--no-instruction", o.no_instruction,
                "Do not send the answer-format system instruction");
}

BackendStack MakeBackend(const BackendOptions& o, const fs::path& out_dir) {
  BackendStack stack;
  std::shared_ptr<Backend> raw;
  if (o.backend == "mock") {
    if (o.scenario.empty()) {
      throw InvalidInputError("--scenario is required with --backend mock");
    }
    raw = std::make_shared<MockBackend>(LoadMockWorld(o.scenario));
    stack.label = "mock:" + o.scenario;
    stack.model = o.model.empty() ? "mock" : o.model;
  } else {
    const char* key = std::getenv(o.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw InvalidInputError("environment variable " + o.api_key_env +
                              " is not set; the live backend needs an API key");
    }
    if (o.model.empty()) {
      throw InvalidInputError("--model is required with --backend live");
    }
    OpenAIOptions options;
    options.base_url = o.base_url;
    options.api_key = key;
    raw = std::make_shared<OpenAIBackend>(options);
    stack.label = "live:" + o.base_url;
    stack.model = o.model;
  }
  stack.counter = std::make_shared<CountingBackend>(raw);
  stack.top = stack.counter;
  if (!o.no_cache) {
    const fs::path dir = o.cache_dir.empty() ? out_dir / "cache" : fs::path(o.cache_dir);
    stack.cache = std::make_shared<CachedBackend>(stack.counter, dir);
    stack.top = stack.cache;
  }
  return stack;
}

PipelineConfig BaseConfig(const BackendOptions& o, const std::string& model) {
  PipelineConfig config;
  config.model_name = model;
  config.score_rule = ParseScoreRule(o.score_rule);
  config.use_instruction = !o.no_instruction;
  return config;
}

PrefixSize ParsePrefix(const std::string& text) {
  if (text == "all") return std::nullopt;
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used == text.size() && value > 0) return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
  }
  throw InvalidInputError("--k must be a positive integer or 'all', got '" +
                          text + "'");
}

std::string BackendSummary(const BackendStack& stack) {
  std::string s = "backend_calls=" + std::to_string(stack.counter->calls());
  if (stack.cache) s += " cache_hits=" + std::to_string(stack.cache->hits());
  return s;
}

// Single triple given as "s|p|o".
Triple ParseTripleArg(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    parts.emplace_back(Trim(std::string_view(text).substr(
        start, bar == std::string::npos ? std::string::npos : bar - start)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  if (parts.size() != 3) throw InvalidInputError("--triple must be 's|p|o'");
  Triple triple{parts[0], parts[1], parts[2]};
  ValidateTriple(triple);
  return triple;
}

// Entry picked by --id from --dataset, or built from --triple.
EntailmentEntry PickEntry(const std::string& dataset_path,
                          const std::string& id, const std::string& triple) {
  if (!triple.empty()) {
    EntailmentEntry entry;
    entry.id = "cli";
    entry.premise = ParseTripleArg(triple);
    entry.hypothesis = entry.premise;
    return entry;
  }
  if (dataset_path.empty() || id.empty()) {
    throw InvalidInputError("give --triple, or --dataset with --id");
  }
  const Dataset dataset = ParseLevyHolt(dataset_path);
  const EntailmentEntry* entry = dataset.Find(id);
  if (entry == nullptr) throw InvalidInputError("no entry with id " + id);
  return *entry;
}

int LabelRank(const std::string& label) {
  if (label == "MCQ_entity") return 0;
  if (label == "MCQ_type") return 1;
  if (label == "EIDI_all") return 2;
  return 3;
}

std::size_t LabelIndex(const std::string& label) {
  const auto pos = label.rfind('_');
  try {
    return std::stoul(label.substr(pos + 1));
  } catch (const std::exception&) {
    return 0;
  }
}

// Reads the config file into --key=value tokens for the given subcommand.
std::vector<std::string> ConfigTokens(const fs::path& path, CLI::App& app,
                                      CLI::App* sub) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open config file " + path.string());
  std::vector<std::string> tokens;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != line.npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == line.npos) {
      throw ParseError(path.string() + ": expected key = value", line_no);
    }
    const std::string key(Trim(line.substr(0, eq)));
    std::string value(Trim(line.substr(eq + 1)));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key == "config") continue;
    if (sub->get_option_no_throw("--" + key) != nullptr) {
      tokens.push_back("--" + key + "=" + value);
      continue;
    }
    bool known = false;
    for (const CLI::App* other : app.get_subcommands({})) {
      known |= other->get_option_no_throw("--" + key) != nullptr;
    }
    if (!known) {
      throw ParseError(path.string() + ": unknown key '" + key + "'", line_no);
    }
  }
  return tokens;
}

}  // namespace

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Explicit inductive inference for predicate entailment"};
  app.name("eidi");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string config_path;
  std::string out_dir = "out";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value configuration file");
    sub->add_option("--out", out_dir, "Artifact directory");
  };

  // run
  BackendOptions run_backend;
  std::string run_dataset, run_types, run_method = "eidi", run_k = "all", run_id;
  std::size_t run_n = 10;
  bool run_attest = false, run_no_fallback = false;
  CLI::App* run = app.add_subcommand("run", "Run a method over a dataset");
  add_common(run);
  AddBackendOptions(run, run_backend);
  run->add_option("--dataset", run_dataset, "Levy/Holt TSV")->required();
  run->add_option("--types", run_types, "Type sidecar TSV (type baseline)");
  run->add_option("--method", run_method, "entity, type or eidi")
      ->check(CLI::IsMember({"entity", "type", "eidi"}));
  run->add_option("--n", run_n, "Alternatives to generate")
      ->check(CLI::PositiveNumber);
  run->add_option("--k", run_k, "Alternatives averaged: integer or 'all'");
  run->add_option("--run-id", run_id, "Run directory name under <out>/runs");
  run->add_flag("--attest", run_attest, "Also label hypothesis attestation");
  run->add_flag("--no-fallback", run_no_fallback,
                "Skip entries without alternatives instead of scoring the "
                "original inquiry");

  // eval
  std::string eval_dataset, eval_attest_labels, eval_split_file, eval_report_dir;
  std::vector<std::string> eval_runs, eval_splits;
  bool eval_sweep = false;
  CLI::App* eval = app.add_subcommand("eval", "Score recorded runs");
  add_common(eval);
  eval->add_option("--dataset", eval_dataset, "Levy/Holt TSV")->required();
  eval->add_option("--run", eval_runs,
                   "Run directory or id (default: every run under <out>/runs)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  eval->add_option("--splits", eval_splits, "attestation and/or frequency")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->check(CLI::IsMember({"attestation", "frequency"}));
  eval->add_option("--attest-labels", eval_attest_labels,
                   "id<TAB>true|false file (default: labels stored in records)");
  eval->add_option("--split-file", eval_split_file,
                   "Frequency split file id<TAB>cons|adv");
  eval->add_flag("--sweep", eval_sweep, "EIDI_i sweep table per EIDI run");
  eval->add_option("--report-dir", eval_report_dir, "Default <out>/reports");

  // attest
  BackendOptions attest_backend;
  std::string attest_dataset, attest_labels_out;
  CLI::App* attest = app.add_subcommand("attest", "Label hypothesis attestation");
  add_common(attest);
  AddBackendOptions(attest, attest_backend);
  attest->add_option("--dataset", attest_dataset, "Levy/Holt TSV")->required();
  attest->add_option("--labels-out", attest_labels_out,
                     "Default <out>/attestation.tsv");

  // type / transform
  BackendOptions stage_backend;
  std::string stage_dataset, stage_id, stage_triple, stage_subject_type,
      stage_object_type;
  std::size_t stage_n = 10;
  CLI::App* type = app.add_subcommand("type", "Type one premise (debug)");
  CLI::App* transform =
      app.add_subcommand("transform", "Generate alternatives for one premise (debug)");
  for (CLI::App* sub : {type, transform}) {
    add_common(sub);
    AddBackendOptions(sub, stage_backend);
    sub->add_option("--dataset", stage_dataset, "Levy/Holt TSV");
    sub->add_option("--id", stage_id, "Entry id (line number)");
    sub->add_option("--triple", stage_triple, "Premise as 's|p|o'");
  }
  transform->add_option("--n", stage_n, "Alternatives")->check(CLI::PositiveNumber);
  transform->add_option("--subject-type", stage_subject_type,
                        "Skip typing and use this subject type");
  transform->add_option("--object-type", stage_object_type,
                        "Skip typing and use this object type");

  // make-world
  WorldParams world_params;
  std::string world_dir;
  CLI::App* make_world =
      app.add_subcommand("make-world", "Write a synthetic mock scenario");
  add_common(make_world);
  make_world->add_option("--dir", world_dir, "Default <out>/world");
  make_world->add_option("--entries", world_params.entries)->check(CLI::PositiveNumber);
  make_world->add_option("--alternatives", world_params.alternatives_per_entry)
      ->check(CLI::PositiveNumber);
  make_world->add_option("--seed", world_params.seed);
  make_world->add_option("--positive-rate", world_params.positive_rate)
      ->check(CLI::Range(0.0, 1.0));
  make_world->add_option("--swapped-rate", world_params.swapped_rate)
      ->check(CLI::Range(0.0, 1.0));
  make_world->add_option("--hypothesis-attested-rate",
                         world_params.hypothesis_attested_rate)
      ->check(CLI::Range(0.0, 1.0));
  make_world->add_option("--alt-attested-if-entailed",
                         world_params.alt_attested_if_entailed)
      ->check(CLI::Range(0.0, 1.0));
  make_world->add_option("--alt-attested-if-not", world_params.alt_attested_if_not)
      ->check(CLI::Range(0.0, 1.0));
  make_world->add_option("--coupling", world_params.attestation_coupling)
      ->check(CLI::Range(0.0, 1.0));
  make_world->add_option("--bias", world_params.bias)->check(CLI::Range(0.0, 1.0));
  make_world->add_option("--jitter", world_params.jitter)->check(CLI::Range(0.0, 0.5));

  // Splice config-file values in right after the subcommand name so that
  // explicit flags, which come later, take precedence.
  std::vector<std::string> argv_strings = args;
  try {
    std::optional<std::string> config_file;
    for (std::size_t i = 1; i < argv_strings.size(); ++i) {
      const std::string& a = argv_strings[i];
      if (a == "--config" && i + 1 < argv_strings.size()) {
        config_file = argv_strings[i + 1];
      } else if (a.starts_with("--config=")) {
        config_file = a.substr(9);
      }
    }
    if (config_file && argv_strings.size() > 1) {
      CLI::App* sub = app.get_subcommand_no_throw(argv_strings[1]);
      if (sub != nullptr) {
        const auto tokens = ConfigTokens(*config_file, app, sub);
        argv_strings.insert(argv_strings.begin() + 2, tokens.begin(), tokens.end());
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::vector<const char*> argv;
  argv.reserve(argv_strings.size());
  for (const auto& s : argv_strings) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const fs::path out_path(out_dir);
  try {
    if (run->parsed()) {
      BackendStack stack = MakeBackend(run_backend, out_path);
      Dataset dataset = ParseLevyHolt(run_dataset);
      if (!run_types.empty()) LoadTypeSidecar(run_types, dataset);
      PipelineConfig config = BaseConfig(run_backend, stack.model);
      config.n_alternatives = run_n;
      config.k = ParsePrefix(run_k);
      config.attest = run_attest;
      config.fallback_to_original = !run_no_fallback;
      const Method method = ParseMethod(run_method);
      if (method != Method::kEidi) config.k.reset();

      RunOptions options;
      options.run_id = run_id.empty()
                           ? (method == Method::kEidi
                                  ? "eidi_" + (config.k ? std::to_string(*config.k)
                                                        : std::string("all"))
                                  : std::string(ToString(method)))
                           : run_id;
      options.run_dir = out_path / "runs" / options.run_id;
      options.method = method;
      options.config = config;
      options.dataset_path = run_dataset;
      options.dataset_digest = Sha256FileHex(run_dataset);
      options.backend_label = stack.label;
      options.max_in_flight = run_backend.max_in_flight;
      const RunStats stats = ExecuteRun(options, dataset, *stack.top);
      out << "run " << options.run_id << ": entries=" << stats.entries
          << " already_recorded=" << stats.already_recorded
          << " processed=" << stats.processed << " failed=" << stats.failed
          << " flagged=" << stats.flagged << ' ' << BackendSummary(stack)
          << (stats.finished ? " finished" : " incomplete") << '\n';
      return 0;
    }

    if (eval->parsed()) {
      const Dataset dataset = ParseLevyHolt(eval_dataset);
      const std::string digest = Sha256FileHex(eval_dataset);
      const auto gold = GoldLabels(dataset);

      std::vector<fs::path> run_dirs;
      for (const auto& r : eval_runs) {
        run_dirs.push_back(fs::is_directory(r) ? fs::path(r)
                                               : out_path / "runs" / r);
      }
      if (run_dirs.empty() && fs::is_directory(out_path / "runs")) {
        for (const auto& dir : fs::directory_iterator(out_path / "runs")) {
          if (fs::exists(dir.path() / "manifest.json")) run_dirs.push_back(dir.path());
        }
      }
      if (run_dirs.empty()) throw InvalidInputError("no runs to evaluate");

      struct LoadedRun {
        RunManifest manifest;
        std::vector<RunRecord> records;
        std::string label;
      };
      std::vector<LoadedRun> runs;
      for (const auto& dir : run_dirs) {
        LoadedRun run_data;
        run_data.manifest = ReadManifest(dir / "manifest.json");
        if (run_data.manifest.dataset_digest != digest) {
          throw ValidationError("run " + run_data.manifest.run_id +
                                " was recorded against a different dataset "
                                "(digest mismatch); rerun it");
        }
        run_data.records = ReadRecords(dir / "records.jsonl");
        run_data.label =
            MethodLabel(run_data.manifest.method, run_data.manifest.config.k);
        runs.push_back(std::move(run_data));
      }
      std::stable_sort(runs.begin(), runs.end(),
                       [](const LoadedRun& a, const LoadedRun& b) {
                         const int ra = LabelRank(a.label), rb = LabelRank(b.label);
                         if (ra != rb) return ra < rb;
                         if (LabelIndex(a.label) != LabelIndex(b.label)) {
                           return LabelIndex(a.label) < LabelIndex(b.label);
                         }
                         return a.manifest.run_id < b.manifest.run_id;
                       });

      const bool want_attestation =
          std::count(eval_splits.begin(), eval_splits.end(), "attestation") > 0;
      const bool want_frequency =
          std::count(eval_splits.begin(), eval_splits.end(), "frequency") > 0;
      std::optional<SplitPair> attestation_split, frequency_split;
      if (want_attestation) {
        std::map<std::string, bool> labels;
        if (!eval_attest_labels.empty()) {
          labels = LoadAttestationLabels(eval_attest_labels);
        } else {
          for (const auto& r : runs) {
            for (const auto& record : r.records) {
              if (record.attested_hypothesis) {
                labels.emplace(record.entry_id, *record.attested_hypothesis);
              }
            }
          }
        }
        attestation_split = ComputeAttestationSplit(dataset, labels);
      }
      if (want_frequency) {
        if (eval_split_file.empty()) {
          throw InvalidInputError("--splits frequency needs --split-file");
        }
        frequency_split = LoadSplitFile(eval_split_file, dataset, Bias::kFrequency);
      }

      const fs::path report_dir =
          eval_report_dir.empty() ? out_path / "reports" : fs::path(eval_report_dir);
      fs::create_directories(report_dir);

      // Every EIDI run records all alternative scores, so one sweep per
      // distinct run is redundant; prefer the k=all runs.
      const bool has_eidi_all =
          std::any_of(runs.begin(), runs.end(), [](const LoadedRun& r) {
            return r.manifest.method == Method::kEidi && !r.manifest.config.k;
          });

      EvalReport report;
      report.model_name = runs.front().manifest.model_name;
      for (const auto& r : runs) {
        MethodResult result;
        result.label = r.label;
        result.run_id = r.manifest.run_id;
        for (const auto& record : r.records) {
          if (record.skipped) ++result.skipped_entries;
          if (!record.flags.empty()) ++result.flagged_entries;
        }
        const ScoredDataset data = FromRecords(r.records, gold);
        result.scored_entries = data.pairs.size();
        try {
          const PRCurve curve = PrCurve(data);
          result.overall = AucNorm(curve);
          std::ofstream tsv(report_dir / (r.manifest.run_id + ".curve.tsv"),
                            std::ios::binary | std::ios::trunc);
          WriteCurveTsv(curve, tsv);
        } catch (const MetricUndefinedError& e) {
          result.overall_note = e.what();
        }
        if (attestation_split) result.attestation = MakeSplitReport(data, *attestation_split);
        if (frequency_split) result.frequency = MakeSplitReport(data, *frequency_split);
        report.methods.push_back(std::move(result));
        if (eval_sweep && r.manifest.method == Method::kEidi &&
            (!r.manifest.config.k || !has_eidi_all)) {
          report.sweeps.push_back({r.manifest.run_id, EidiSweep(r.records, gold)});
        }
      }
      const std::string text = RenderTextReport(report);
      {
        std::ofstream txt(report_dir / "report.txt", std::ios::binary | std::ios::trunc);
        txt << text;
        std::ofstream json(report_dir / "report.json", std::ios::binary | std::ios::trunc);
        json << RenderJsonReport(report);
        if (!txt || !json) throw Error("cannot write reports under " + report_dir.string());
      }
      out << text;
      return 0;
    }

    if (attest->parsed()) {
      BackendStack stack = MakeBackend(attest_backend, out_path);
      const Dataset dataset = ParseLevyHolt(attest_dataset);
      const PipelineConfig config = BaseConfig(attest_backend, stack.model);
      std::vector<std::pair<std::string, bool>> labels;
      std::size_t flagged = 0;
      OrderedParallelFor(
          dataset.entries.size(), attest_backend.max_in_flight,
          [&](std::size_t i) {
            std::vector<std::string> flags;
            const bool attested =
                AttestHypothesis(dataset.entries[i], *stack.top, config, &flags);
            return std::make_pair(attested, !flags.empty());
          },
          [&](std::size_t i, std::pair<bool, bool> result) {
            labels.emplace_back(dataset.entries[i].id, result.first);
            if (result.second) ++flagged;
          });
      const fs::path labels_path = attest_labels_out.empty()
                                       ? out_path / "attestation.tsv"
                                       : fs::path(attest_labels_out);
      if (labels_path.has_parent_path()) fs::create_directories(labels_path.parent_path());
      std::ofstream file(labels_path, std::ios::binary | std::ios::trunc);
      WriteAttestationLabels(labels, file);
      if (!file) throw Error("cannot write " + labels_path.string());
      const auto attested = std::count_if(labels.begin(), labels.end(),
                                          [](const auto& l) { return l.second; });
      out << "attest: entries=" << labels.size() << " attested=" << attested
          << " flagged=" << flagged << ' ' << BackendSummary(stack) << " -> "
          << labels_path.string() << '\n';
      return 0;
    }

    if (type->parsed() || transform->parsed()) {
      BackendStack stack = MakeBackend(stage_backend, out_path);
      const EntailmentEntry entry =
          PickEntry(stage_dataset, stage_id, stage_triple);
      const PipelineConfig config = BaseConfig(stage_backend, stack.model);
      TypedPremise typed{entry.premise, stage_subject_type, stage_object_type};
      bool fallback = false;
      if (type->parsed() || typed.subject_type.empty() || typed.object_type.empty()) {
        try {
          typed = TypePremise(entry, *stack.top, config);
        } catch (const TypingParseError& e) {
          typed.subject_type = typed.object_type = std::string(kFallbackType);
          fallback = true;
          err << "warning: " << e.what() << '\n';
        }
      }
      if (type->parsed()) {
        out << typed.subject_type << '\t' << typed.object_type
            << (fallback ? "\t(typing_fallback)" : "") << '\n';
        return 0;
      }
      for (const auto& alt : GenerateAlternatives(typed, stage_n, *stack.top, config)) {
        out << alt.subject << " | " << alt.predicate << " | " << alt.object << '\n';
      }
      return 0;
    }

    if (make_world->parsed()) {
      const fs::path dir = world_dir.empty() ? out_path / "world" : fs::path(world_dir);
      const Scenario scenario = GenerateWorld(world_params);
      WriteScenario(scenario, dir);
      out << "world: entries=" << scenario.dataset.entries.size()
          << " facts=" << scenario.world.attested_facts.size() << " -> "
          << dir.string() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace eidi::cli
