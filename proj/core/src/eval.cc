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

#include "eidi/eval.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "eidi/errors.h"

namespace eidi {

ScoredDataset ScoredDataset::Restrict(const std::set<std::string>& ids) const {
  ScoredDataset out;
  for (const auto& pair : pairs) {
    if (ids.contains(pair.entry_id)) out.pairs.push_back(pair);
  }
  return out;
}

PRCurve PrCurve(const ScoredDataset& data) {
  std::set<std::string> ids;
  std::size_t positives = 0;
  for (const auto& pair : data.pairs) {
    if (!(pair.score >= 0.0 && pair.score <= 1.0)) {
      throw InvalidInputError("score for " + pair.entry_id +
                              " is outside [0,1]");
    }
    if (!ids.insert(pair.entry_id).second) {
      throw InvalidInputError("duplicate id " + pair.entry_id);
    }
    if (pair.gold) ++positives;
  }
  const std::size_t total = data.pairs.size();
  if (positives == 0 || positives == total) {
    throw MetricUndefinedError(
        "precision-recall curve needs both positive and negative entries");
  }

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return data.pairs[a].score > data.pairs[b].score;
  });

  PRCurve curve;
  curve.positives = positives;
  curve.total = total;
  curve.positive_prior =
      static_cast<double>(positives) / static_cast<double>(total);
  std::size_t tp = 0;
  std::size_t fp = 0;
  for (std::size_t i = 0; i < total;) {
    const double threshold = data.pairs[order[i]].score;
    while (i < total && data.pairs[order[i]].score == threshold) {
      (data.pairs[order[i]].gold ? tp : fp) += 1;
      ++i;
    }
    CurvePoint point;
    point.threshold = threshold;
    point.true_positives = tp;
    point.false_positives = fp;
    point.recall = static_cast<double>(tp) / static_cast<double>(positives);
    point.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    curve.points.push_back(point);
  }
  return curve;
}

double NormalizedPrecision(double precision, double prior) {
  return std::max(0.0, (precision - prior) / (1.0 - prior));
}

double AucNorm(const PRCurve& curve) {
  if (curve.points.empty() || curve.positives == 0 ||
      !(curve.positive_prior < 1.0)) {
    throw MetricUndefinedError("AUC_norm undefined for this curve");
  }
  const double prior = curve.positive_prior;
  // Widths are measured in true positives; one division by 2P at the end.
  const CurvePoint& first = curve.points.front();
  double prev_norm = NormalizedPrecision(first.precision, prior);
  double twice_area = 2.0 * static_cast<double>(first.true_positives) * prev_norm;
  std::size_t prev_tp = first.true_positives;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const CurvePoint& point = curve.points[i];
    const double norm = NormalizedPrecision(point.precision, prior);
    twice_area +=
        static_cast<double>(point.true_positives - prev_tp) * (prev_norm + norm);
    prev_tp = point.true_positives;
    prev_norm = norm;
  }
  const double area = twice_area / (2.0 * static_cast<double>(curve.positives));
  return std::clamp(area, 0.0, 1.0);
}

double AucNorm(const ScoredDataset& data) { return AucNorm(PrCurve(data)); }

void WriteCurveTsv(const PRCurve& curve, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "threshold\trecall\tprecision\tnormalized_precision\n";
  for (const auto& point : curve.points) {
    out << point.threshold << '\t' << point.recall << '\t' << point.precision
        << '\t' << NormalizedPrecision(point.precision, curve.positive_prior)
        << '\n';
  }
  out.precision(old_precision);
}

namespace {

SubsetResult ScoreSubset(const ScoredDataset& data, const SplitSpec& spec) {
  SubsetResult result;
  result.name = ToString(spec.name);
  const ScoredDataset subset = data.Restrict(spec.member_ids);
  result.size = subset.pairs.size();
  if (result.size < 2) {
    result.note = "fewer than 2 entries";
    return result;
  }
  try {
    result.auc_norm = AucNorm(subset);
  } catch (const MetricUndefinedError&) {
    result.note = "single-class subset";
  }
  return result;
}

}  // namespace

SplitReport MakeSplitReport(const ScoredDataset& data, const SplitPair& split) {
  SplitReport report;
  report.consistent = ScoreSubset(data, split.consistent);
  report.adversarial = ScoreSubset(data, split.adversarial);
  if (report.consistent.auc_norm && report.adversarial.auc_norm) {
    report.diff = *report.adversarial.auc_norm - *report.consistent.auc_norm;
  }
  return report;
}

std::vector<SweepRow> EidiSweep(const std::vector<RunRecord>& records,
                                const std::map<std::string, bool>& gold) {
  std::vector<const RunRecord*> used;
  std::size_t max_i = 0;
  for (const auto& record : records) {
    if (record.skipped || record.scored.empty()) continue;
    if (!gold.contains(record.entry_id)) {
      throw ValidationError("no gold label for record " + record.entry_id);
    }
    used.push_back(&record);
    max_i = std::max(max_i, record.scored.size());
  }

  auto row_for = [&](PrefixSize k) {
    ScoredDataset data;
    data.pairs.reserve(used.size());
    for (const RunRecord* record : used) {
      data.pairs.push_back({record->entry_id, PrefixMean(record->scored, k),
                            gold.at(record->entry_id)});
    }
    return AucNorm(data);
  };

  std::vector<SweepRow> rows;
  for (std::size_t i = 1; i <= max_i; ++i) {
    rows.push_back({"EIDI_" + std::to_string(i), i, row_for(i)});
  }
  rows.push_back({"EIDI_all", std::nullopt, row_for(std::nullopt)});
  return rows;
}

ScoredDataset FromRecords(const std::vector<RunRecord>& records,
                          const std::map<std::string, bool>& gold) {
  ScoredDataset data;
  for (const auto& record : records) {
    if (record.skipped) continue;
    const auto it = gold.find(record.entry_id);
    if (it == gold.end()) {
      throw ValidationError("no gold label for record " + record.entry_id);
    }
    data.pairs.push_back({record.entry_id, record.aggregate, it->second});
  }
  return data;
}

std::map<std::string, bool> GoldLabels(const Dataset& dataset) {
  std::map<std::string, bool> gold;
  for (const auto& entry : dataset.entries) gold[entry.id] = entry.gold;
  return gold;
}

}  // namespace eidi
