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

#ifndef EIDI_TESTS_ORACLE_AUC_ORACLE_H_
#define EIDI_TESTS_ORACLE_AUC_ORACLE_H_

// Brute-force AUC_norm used as a reference by the tests. It shares no code
// with eidi::AucNorm: every distinct score is tried as a threshold and the
// predicted-positive set is recounted from scratch each time.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace eidi::oracle {

// (score, gold) pairs. Requires at least one positive and one negative.
inline double BruteForceAucNorm(const std::vector<std::pair<double, bool>>& data) {
  std::size_t positives = 0;
  for (const auto& d : data) positives += d.second ? 1 : 0;
  const double prior = static_cast<double>(positives) / data.size();

  std::vector<double> thresholds;
  for (const auto& d : data) thresholds.push_back(d.first);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  std::reverse(thresholds.begin(), thresholds.end());

  double area = 0.0;
  double prev_recall = 0.0;
  double prev_norm = 0.0;
  bool first = true;
  for (double t : thresholds) {
    double tp = 0, fp = 0;
    for (const auto& d : data) {
      if (d.first >= t) (d.second ? tp : fp) += 1;
    }
    const double recall = tp / positives;
    const double precision = tp / (tp + fp);
    const double norm = std::max(0.0, (precision - prior) / (1.0 - prior));
    if (first) {
      // Below the first threshold the curve is held at its first value.
      area += recall * norm;
      first = false;
    } else {
      area += (recall - prev_recall) * (norm + prev_norm) / 2.0;
    }
    prev_recall = recall;
    prev_norm = norm;
  }
  return area;
}

}  // namespace eidi::oracle

#endif  // EIDI_TESTS_ORACLE_AUC_ORACLE_H_
