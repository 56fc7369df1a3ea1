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

#include "eidi/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace eidi {
namespace {

using nlohmann::json;

std::string Cell(const std::optional<double>& value) {
  return value ? FormatPercent(*value) : "n/a";
}

std::string Pad(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

std::string PadLeft(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

void RenderSplitTable(std::ostringstream& out, const EvalReport& report,
                      const std::string& title, bool frequency) {
  bool any = false;
  for (const auto& m : report.methods) {
    any |= frequency ? m.frequency.has_value() : m.attestation.has_value();
  }
  if (!any) return;
  out << '\n' << title << '\n';
  out << Pad("Pipeline", 14) << PadLeft("cons.", 10) << PadLeft("adv.", 10)
      << PadLeft("diff.", 10) << PadLeft("n_cons", 8) << PadLeft("n_adv", 8)
      << '\n';
  for (const auto& m : report.methods) {
    const auto& split = frequency ? m.frequency : m.attestation;
    if (!split) continue;
    out << Pad(m.label, 14) << PadLeft(Cell(split->consistent.auc_norm), 10)
        << PadLeft(Cell(split->adversarial.auc_norm), 10)
        << PadLeft(split->diff ? FormatSignedPercent(*split->diff) : "n/a", 10)
        << PadLeft(std::to_string(split->consistent.size), 8)
        << PadLeft(std::to_string(split->adversarial.size), 8) << '\n';
  }
}

json SubsetJson(const SubsetResult& subset) {
  json j;
  j["name"] = subset.name;
  j["size"] = subset.size;
  j["auc_norm"] = subset.auc_norm ? json(*subset.auc_norm) : json(nullptr);
  if (!subset.note.empty()) j["note"] = subset.note;
  return j;
}

json SplitJson(const SplitReport& split) {
  json j;
  j["consistent"] = SubsetJson(split.consistent);
  j["adversarial"] = SubsetJson(split.adversarial);
  j["diff"] = split.diff ? json(*split.diff) : json(nullptr);
  return j;
}

}  // namespace

std::string FormatPercent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * fraction);
  return buf;
}

std::string FormatSignedPercent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%+.2f", 100.0 * fraction);
  return buf;
}

std::string RenderTextReport(const EvalReport& report) {
  std::ostringstream out;
  const std::string model = report.model_name.empty() ? "model" : report.model_name;
  out << "Overall AUC_norm (%)\n";
  out << Pad("Pipeline", 14) << PadLeft(model, std::max<std::size_t>(10, model.size() + 2))
      << PadLeft("scored", 8) << PadLeft("skipped", 9) << PadLeft("flagged", 9)
      << '\n';
  for (const auto& m : report.methods) {
    out << Pad(m.label, 14)
        << PadLeft(Cell(m.overall), std::max<std::size_t>(10, model.size() + 2))
        << PadLeft(std::to_string(m.scored_entries), 8)
        << PadLeft(std::to_string(m.skipped_entries), 9)
        << PadLeft(std::to_string(m.flagged_entries), 9) << '\n';
  }
  RenderSplitTable(out, report, "Attestation split AUC_norm (%)", false);
  RenderSplitTable(out, report, "Frequency split AUC_norm (%)", true);
  for (const auto& sweep : report.sweeps) {
    out << "\nEIDI_i sweep AUC_norm (%) [" << sweep.run_id << "]\n";
    out << Pad("Pipeline", 14) << PadLeft(model, 10) << '\n';
    for (const auto& row : sweep.rows) {
      out << Pad(row.label, 14) << PadLeft(FormatPercent(row.auc_norm), 10)
          << '\n';
    }
  }
  return out.str();
}

std::string RenderJsonReport(const EvalReport& report) {
  json j;
  j["model"] = report.model_name;
  json methods = json::array();
  for (const auto& m : report.methods) {
    json row;
    row["label"] = m.label;
    row["run_id"] = m.run_id;
    row["overall"] = m.overall ? json(*m.overall) : json(nullptr);
    if (!m.overall_note.empty()) row["overall_note"] = m.overall_note;
    row["scored_entries"] = m.scored_entries;
    row["skipped_entries"] = m.skipped_entries;
    row["flagged_entries"] = m.flagged_entries;
    if (m.attestation) row["attestation"] = SplitJson(*m.attestation);
    if (m.frequency) row["frequency"] = SplitJson(*m.frequency);
    methods.push_back(row);
  }
  j["methods"] = methods;
  json sweeps = json::array();
  for (const auto& sweep : report.sweeps) {
    json rows = json::array();
    for (const auto& row : sweep.rows) {
      rows.push_back({{"label", row.label},
                      {"i", row.i ? json(*row.i) : json(nullptr)},
                      {"auc_norm", row.auc_norm}});
    }
    sweeps.push_back({{"run_id", sweep.run_id}, {"rows", rows}});
  }
  j["sweeps"] = sweeps;
  return j.dump(2) + "\n";
}

}  // namespace eidi
