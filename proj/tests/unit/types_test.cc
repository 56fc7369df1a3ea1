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

#include "eidi/types.h"

#include "eidi/errors.h"
#include "gtest/gtest.h"

namespace eidi {
namespace {

EntailmentEntry Entry(ArgOrder order) {
  EntailmentEntry e;
  e.id = "1";
  e.premise = {"Obama", "was born in", "Hawaii"};
  e.order = order;
  e.hypothesis = order == ArgOrder::kAligned
                     ? Triple{"Obama", "is from", "Hawaii"}
                     : Triple{"Hawaii", "is the birthplace of", "Obama"};
  return e;
}

TEST(DeriveHypothesisTest, FollowsArgumentOrder) {
  const auto aligned = DeriveHypothesis(Entry(ArgOrder::kAligned), "Biden", "Pennsylvania");
  EXPECT_EQ(aligned.premise, (Triple{"Biden", "was born in", "Pennsylvania"}));
  EXPECT_EQ(aligned.hypothesis, (Triple{"Biden", "is from", "Pennsylvania"}));

  const auto swapped = DeriveHypothesis(Entry(ArgOrder::kSwapped), "Biden", "Pennsylvania");
  EXPECT_EQ(swapped.premise, (Triple{"Biden", "was born in", "Pennsylvania"}));
  EXPECT_EQ(swapped.hypothesis,
            (Triple{"Pennsylvania", "is the birthplace of", "Biden"}));
}

TEST(DeriveHypothesisTest, IdentitySubstitutionGivesOriginal) {
  for (auto order : {ArgOrder::kAligned, ArgOrder::kSwapped}) {
    const auto e = Entry(order);
    EXPECT_EQ(DeriveHypothesis(e, e.premise.subject, e.premise.object),
              OriginalInquiry(e));
  }
}

TEST(DeriveHypothesisTest, RejectsEmptyArguments) {
  EXPECT_THROW(DeriveHypothesis(Entry(ArgOrder::kAligned), "  ", "x"),
               InvalidInputError);
  EXPECT_THROW(DeriveHypothesis(Entry(ArgOrder::kAligned), "x", ""),
               InvalidInputError);
}

TEST(ValidateTest, TriplesAndEntries) {
  EXPECT_NO_THROW(ValidateTriple({"a", "b", "c"}));
  EXPECT_THROW(ValidateTriple({"a", "", "c"}), InvalidInputError);
  EXPECT_THROW(ValidateTriple({"a\tb", "p", "c"}), InvalidInputError);
  EXPECT_THROW(ValidateTriple({"a", "p", "c\n"}), InvalidInputError);
  EXPECT_NO_THROW(ValidateEntry(Entry(ArgOrder::kSwapped)));
  auto bad = Entry(ArgOrder::kAligned);
  bad.order = ArgOrder::kSwapped;
  EXPECT_THROW(ValidateEntry(bad), InvalidInputError);
}

TEST(PrefixMeanTest, MeansOfLeadingScores) {
  const std::vector<double> scores = {1.0, 0.0, 0.5, 0.5};
  EXPECT_DOUBLE_EQ(PrefixMean(scores, 1), 1.0);
  EXPECT_DOUBLE_EQ(PrefixMean(scores, 2), 0.5);
  EXPECT_DOUBLE_EQ(PrefixMean(scores, std::nullopt), 0.5);
  EXPECT_DOUBLE_EQ(PrefixMean(scores, 100), 0.5);
  EXPECT_THROW(PrefixMean(scores, 0), InvalidInputError);
  EXPECT_THROW(PrefixMean(std::vector<double>{}, std::nullopt), InvalidInputError);

  std::vector<ScoredInquiry> scored(3);
  scored[0].score = 0.3;
  scored[1].score = 0.6;
  scored[2].score = 0.9;
  EXPECT_DOUBLE_EQ(PrefixMean(scored, 2), 0.45);
}

TEST(TrimTest, Whitespace) {
  EXPECT_EQ(Trim("  a b \t\n"), "a b");
  EXPECT_EQ(Trim("   "), "");
  EXPECT_EQ(ToString(ArgOrder::kSwapped), "swapped");
}

}  // namespace
}  // namespace eidi
