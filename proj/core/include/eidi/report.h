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

#ifndef EIDI_REPORT_H_
#define EIDI_REPORT_H_

// Evaluation reports laid out like the result tables: an overall table, a
// per-bias consistent/adversarial/diff table and EIDI_i sweep tables.
// Numbers are percentages with two decimals.

#include <optional>
#include <string>
#include <vector>

#include "eidi/eval.h"

namespace eidi {

struct MethodResult {
  std::string label;  // MCQ_entity, MCQ_type, EIDI_all, EIDI_<k>
  std::string run_id;
  std::optional<double> overall;
  std::string overall_note;
  std::optional<SplitReport> attestation;
  std::optional<SplitReport> frequency;
  std::size_t scored_entries = 0;
  std::size_t skipped_entries = 0;
  std::size_t flagged_entries = 0;
};

struct SweepTable {
  std::string run_id;
  std::vector<SweepRow> rows;
};

struct EvalReport {
  std::string model_name;
  std::vector<MethodResult> methods;
  std::vector<SweepTable> sweeps;
};

// "35.52" for 0.3552; signed variant "+8.80" / "-46.17".
std::string FormatPercent(double fraction);
std::string FormatSignedPercent(double fraction);

std::string RenderTextReport(const EvalReport& report);
// Metric values are raw fractions in [0, 1]; the text report shows percent.
std::string RenderJsonReport(const EvalReport& report);

}  // namespace eidi

#endif  // EIDI_REPORT_H_
