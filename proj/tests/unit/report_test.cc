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

#include "gtest/gtest.h"
#include "json.hpp"

namespace eidi {
namespace {

EvalReport Sample() {
  EvalReport report;
  report.model_name = "mock";
  MethodResult entity;
  entity.label = "MCQ_entity";
  entity.run_id = "entity";
  entity.overall = 0.2385;
  entity.scored_entries = 10;
  SplitReport split;
  split.consistent = {"attestation_consistent", 6, 0.5, ""};
  split.adversarial = {"attestation_adversarial", 4, 0.125, ""};
  split.diff = 0.125 - 0.5;
  entity.attestation = split;
  MethodResult type;
  type.label = "MCQ_type";
  type.run_id = "type";
  type.overall_note = "single-class";
  type.skipped_entries = 10;
  report.methods = {entity, type};
  report.sweeps.push_back({"eidi_all", {{"EIDI_1", 1, 0.25}, {"EIDI_all", std::nullopt, 0.5}}});
  return report;
}

TEST(ReportTest, Percentages) {
  EXPECT_EQ(FormatPercent(0.2385), "23.85");
  EXPECT_EQ(FormatPercent(1.0), "100.00");
  EXPECT_EQ(FormatSignedPercent(-0.375), "-37.50");
  EXPECT_EQ(FormatSignedPercent(0.05), "+5.00");
}

TEST(ReportTest, TextTables) {
  const std::string text = RenderTextReport(Sample());
  EXPECT_NE(text.find("Overall AUC_norm (%)"), std::string::npos);
  EXPECT_NE(text.find("23.85"), std::string::npos);
  EXPECT_NE(text.find("Attestation split AUC_norm (%)"), std::string::npos);
  EXPECT_NE(text.find("-37.50"), std::string::npos);
  EXPECT_EQ(text.find("Frequency split"), std::string::npos);
  EXPECT_NE(text.find("EIDI_i sweep AUC_norm (%) [eidi_all]"), std::string::npos);
  EXPECT_EQ(RenderTextReport(Sample()), text);
}

TEST(ReportTest, JsonCarriesNumbers) {
  const auto j = nlohmann::json::parse(RenderJsonReport(Sample()));
  EXPECT_EQ(j["model"], "mock");
  ASSERT_EQ(j["methods"].size(), 2u);
  EXPECT_DOUBLE_EQ(j["methods"][0]["overall"].get<double>(), 0.2385);
  EXPECT_TRUE(j["methods"][1]["overall"].is_null());
  EXPECT_DOUBLE_EQ(j["methods"][0]["attestation"]["diff"].get<double>(), -0.375);
}

}  // namespace
}  // namespace eidi
