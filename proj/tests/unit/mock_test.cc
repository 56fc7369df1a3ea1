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

#include "eidi/mock.h"

#include "eidi/errors.h"
#include "eidi/pipeline.h"
#include "eidi/prompts.h"
#include "gtest/gtest.h"
#include "unit/test_util.h"

namespace eidi {
namespace {

MockWorld SmallWorld() {
  MockWorld world;
  world.attested_facts = {{"Obama", "is from", "Hawaii"}};
  world.typing_table[{"Obama", "was born in", "Hawaii"}] = {"person", "island"};
  world.alternatives_table[{"Obama", "was born in", "Hawaii"}] = {
      {"Biden", "was born in", "Scranton"}, {"Lincoln", "was born in", "Kentucky"}};
  world.noise_seed = 42;
  return world;
}

ChatRequest Request(std::string prompt, bool probs = true) {
  ChatRequest request;
  request.user_prompt = std::move(prompt);
  request.want_token_probs = probs;
  request.model_name = "mock";
  return request;
}

Inquiry Ask(Triple hypothesis) {
  return {{"Obama", "was born in", "Hawaii"}, std::move(hypothesis)};
}

TEST(MockBackendTest, AnswersByHypothesisAttestation) {
  MockBackend mock(SmallWorld());
  const auto yes = mock.Complete(Request(RenderPredictionPrompt(Ask({"obama", "IS  from", "hawaii"}))));
  ASSERT_EQ(yes.tokens.size(), 3u);
  EXPECT_EQ(yes.text, "A) True");
  EXPECT_EQ(yes.tokens[0].text, "A");
  EXPECT_EQ(yes.tokens[0].alternatives[0].text, "A");
  EXPECT_NEAR(yes.tokens[0].alternatives[0].probability +
                  yes.tokens[0].alternatives[1].probability,
              1.0, 1e-15);

  const auto no = mock.Complete(Request(RenderPredictionPrompt(Ask({"Obama", "is from", "Kenya"}))));
  EXPECT_EQ(no.text, "B) False");
  EXPECT_EQ(no.tokens[0].text, "B");
  EXPECT_NO_THROW(ValidateResponse(no));

  const auto attest = mock.Complete(Request(RenderAttestationPrompt({"Obama", "is from", "Hawaii"})));
  EXPECT_EQ(attest.text, "A) True");
  EXPECT_EQ(mock.calls(), 3u);
}

TEST(MockBackendTest, ProbabilityIsSeededAndBounded) {
  MockWorld world = SmallWorld();
  MockBackend a(world), b(world);
  world.noise_seed = 43;
  MockBackend c(world);
  int differs = 0;
  for (int i = 0; i < 50; ++i) {
    const std::string prompt = "Question: x" + std::to_string(i) + " y z. Is that true or false?";
    const double p = a.AnswerProbability(prompt);
    EXPECT_EQ(p, b.AnswerProbability(prompt));
    EXPECT_GE(p, 0.93);
    EXPECT_LE(p, 0.97);
    differs += p != c.AnswerProbability(prompt) ? 1 : 0;
  }
  EXPECT_GT(differs, 40);
}

TEST(MockBackendTest, TypingAndTransformation) {
  MockBackend mock(SmallWorld());
  const Triple premise{"Obama", "was born in", "Hawaii"};
  const auto typed = mock.Complete(Request(RenderTypingPrompt(premise), false));
  EXPECT_EQ(typed.text, " a person | was born in | an island");
  const auto unknown = mock.Complete(Request(RenderTypingPrompt({"x", "p", "y"}), false));
  EXPECT_EQ(unknown.text, " a thing | p | a thing");

  const auto alts = mock.Complete(
      Request(RenderTransformationPrompt({premise, "a person", "an island"}, 10), false));
  EXPECT_EQ(alts.text,
            " Biden | was born in | Scranton.\n- Lincoln | was born in | Kentucky.");
  const auto one = mock.Complete(
      Request(RenderTransformationPrompt({premise, "a person", "an island"}, 1), false));
  EXPECT_EQ(one.text, " Biden | was born in | Scranton.");
}

TEST(MockBackendTest, UnknownPromptAndCapability) {
  MockBackend mock(SmallWorld());
  EXPECT_EQ(mock.Complete(Request("hello", false)).text, "I cannot answer that.");
  MockWorld world = SmallWorld();
  world.supports_token_probs = false;
  MockBackend plain(world);
  EXPECT_THROW(plain.Complete(Request("hello", true)), CapabilityError);
  EXPECT_EQ(plain.Complete(Request(RenderAttestationPrompt({"Obama", "is from", "Hawaii"}), false)).text,
            "A) True");
}

TEST(MockWorldTest, JsonRoundTrip) {
  const MockWorld world = SmallWorld();
  EXPECT_EQ(MockWorldFromJson(MockWorldToJson(world)), world);
  testing::TempDir dir;
  SaveMockWorld(world, dir / "w.json");
  EXPECT_EQ(LoadMockWorld(dir / "w.json"), world);
  EXPECT_THROW(MockWorldFromJson("{"), ParseError);
}

TEST(MockWorldTest, CanonicalForms) {
  EXPECT_EQ(CanonicalSentence("  Obama   IS from\tHawaii "), "obama is from hawaii");
  EXPECT_EQ(CanonicalFact({"Obama", "is from", "Hawaii"}), "obama is from hawaii");
}

}  // namespace
}  // namespace eidi
