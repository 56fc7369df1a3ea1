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

#ifndef EIDI_EVAL_H_
#define EIDI_EVAL_H_

// Precision-recall curves and the normalized area under them.
//
// AUC_norm measures how much better a ranking is than the degenerate
// classifier that answers "entails" for everything, whose precision is the
// positive prior. Each curve precision p is rescaled to
//   p' = max(0, (p - prior) / (1 - prior))
// and p' is integrated over recall with the trapezoidal rule across the
// curve points. The segment from recall 0 to the first point takes that
// point's p' (flat extension), so a perfect ranking scores exactly 1 and a
// constant score exactly 0.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eidi/dataset.h"
#include "eidi/types.h"

namespace eidi {

struct ScoredPair {
  std::string entry_id;
  double score = 0.0;
  bool gold = false;
};

struct ScoredDataset {
  std::vector<ScoredPair> pairs;

  // Pairs whose id is in `ids`, in original order.
  ScoredDataset Restrict(const std::set<std::string>& ids) const;
};

struct CurvePoint {
  double recall = 0.0;
  double precision = 0.0;
  double threshold = 0.0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
};

struct PRCurve {
  // One point per distinct score, thresholds descending, recall
  // non-decreasing. Equal scores enter together.
  std::vector<CurvePoint> points;
  double positive_prior = 0.0;
  std::size_t positives = 0;
  std::size_t total = 0;
};

// Throws MetricUndefinedError without at least one positive and one
// negative, InvalidInputError on a score outside [0, 1] or a duplicate id.
PRCurve PrCurve(const ScoredDataset& data);

double NormalizedPrecision(double precision, double prior);

double AucNorm(const PRCurve& curve);
double AucNorm(const ScoredDataset& data);

// Columns: threshold, recall, precision, normalized_precision.
void WriteCurveTsv(const PRCurve& curve, std::ostream& out);

struct SubsetResult {
  std::string name;
  std::size_t size = 0;
  std::optional<double> auc_norm;  // nullopt when not computable
  std::string note;                // why it is not computable
};

struct SplitReport {
  SubsetResult consistent;
  SubsetResult adversarial;
  std::optional<double> diff;  // adversarial - consistent
};

// Scores each subset with the same per-entry scores. Split ids absent from
// `data` (e.g. skipped entries) are ignored. A subset with fewer than two
// entries or a single class is reported as not computable.
SplitReport MakeSplitReport(const ScoredDataset& data, const SplitPair& split);

struct SweepRow {
  std::string label;           // "EIDI_<i>" or "EIDI_all"
  std::optional<std::size_t> i;  // nullopt for the "all" row
  double auc_norm = 0.0;
};

// Recomputes prefix means for i = 1..max alternatives and AUC_norm per i,
// followed by an "all" row. An entry with fewer than i scores contributes
// its full mean. Skipped records are excluded. Throws ValidationError if a
// record's id has no gold label.
std::vector<SweepRow> EidiSweep(const std::vector<RunRecord>& records,
                                const std::map<std::string, bool>& gold);

// Aggregate scores of non-skipped records, joined with gold labels.
ScoredDataset FromRecords(const std::vector<RunRecord>& records,
                          const std::map<std::string, bool>& gold);

std::map<std::string, bool> GoldLabels(const Dataset& dataset);

}  // namespace eidi

#endif  // EIDI_EVAL_H_
