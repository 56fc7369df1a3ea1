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

#ifndef EIDI_PROMPTS_H_
#define EIDI_PROMPTS_H_

// Prompt templates for the three pipeline stages plus hypothesis
// attestation. Placeholders are written {name}; Render substitutes each
// occurrence and rejects a template that still holds an unfilled one.
//
// Lines are joined with '\n', no trailing newline; the completion point of
// each template is its final line.

#include <map>
#include <string>
#include <string_view>

#include "eidi/types.h"

namespace eidi {

enum class TemplateName { kTyping, kTransformation, kPrediction, kAttestation };

std::string_view ToString(TemplateName name);

struct PromptTemplate {
  TemplateName name;
  std::string_view body;
};

const PromptTemplate& GetTemplate(TemplateName name);

// Instruction sent as the system message for prediction-style prompts.
inline constexpr std::string_view kPredictionInstruction =
    "Only return one mark A, B or C to answer the question.";

// Throws InvalidInputError if a placeholder in the body has no value.
std::string Render(const PromptTemplate& tmpl,
                   const std::map<std::string, std::string>& values);

// Three fixed few-shot lines, then "{s} | {p} | {o} ->".
std::string RenderTypingPrompt(const Triple& premise);

// Asks for n + 1 facts; the original premise is the only example.
std::string RenderTransformationPrompt(const TypedPremise& typed,
                                       std::size_t n);

// "Question:If {s} {p} {o}, then {s} {h} {o}. Is that true or false?" with
// hypothesis arguments taken from the inquiry (so swapped entries read
// "then {o} {h} {s}").
std::string RenderPredictionPrompt(const Inquiry& inquiry);

// Prediction shape without the premise clause.
std::string RenderAttestationPrompt(const Triple& hypothesis);

// Hex SHA-256 of a template body, recorded in run manifests.
std::string TemplateHash(TemplateName name);

}  // namespace eidi

#endif  // EIDI_PROMPTS_H_
