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

#include "eidi/prompts.h"

#include "eidi/errors.h"
#include "eidi/hash.h"

namespace eidi {
namespace {

constexpr std::string_view kTypingBody =
    "Type the entities in the following triples:\n"
    "Hitler | was born in | Poland -> a person | was born in | a country\n"
    "Hogs | eats | Corn -> an animal | eats | a food\n"
    "Aspirin | may reduce the risk of | Cancer -> a medicine | may reduce the "
    "risk of | a disease\n"
    "{s} | {p} | {o} ->";

constexpr std::string_view kTransformationBody =
    "Write {n+1} facts in the form of \" {t_s} | {p} | {t_o}.\"\n"
    "- {s} | {p} | {o}.\n"
    "-";

constexpr std::string_view kPredictionBody =
    "Question:If {s} {p} {o}, then {h_s} {h} {h_o}. Is that true or false?\n"
    "Choices:\n"
    "A) True\n"
    "B) False\n"
    "Answer:";

constexpr std::string_view kAttestationBody =
    "Question: {s} {h} {o}. Is that true or false?\n"
    "Choices:\n"
    "A) True\n"
    "B) False\n"
    "Answer:";

const PromptTemplate kTemplates[] = {
    {TemplateName::kTyping, kTypingBody},
    {TemplateName::kTransformation, kTransformationBody},
    {TemplateName::kPrediction, kPredictionBody},
    {TemplateName::kAttestation, kAttestationBody},
};

}  // namespace

std::string_view ToString(TemplateName name) {
  switch (name) {
    case TemplateName::kTyping:
      return "typing";
    case TemplateName::kTransformation:
      return "transformation";
    case TemplateName::kPrediction:
      return "prediction";
    case TemplateName::kAttestation:
      return "attestation";
  }
  return "unknown";
}

const PromptTemplate& GetTemplate(TemplateName name) {
  return kTemplates[static_cast<int>(name)];
}

std::string Render(const PromptTemplate& tmpl,
                   const std::map<std::string, std::string>& values) {
  std::string out;
  const std::string_view body = tmpl.body;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const auto open = body.find('{', pos);
    if (open == std::string_view::npos) {
      out.append(body.substr(pos));
      break;
    }
    const auto close = body.find('}', open);
    if (close == std::string_view::npos) {
      throw InvalidInputError("unterminated placeholder in template " +
                              std::string(ToString(tmpl.name)));
    }
    out.append(body.substr(pos, open - pos));
    const std::string key(body.substr(open + 1, close - open - 1));
    const auto it = values.find(key);
    if (it == values.end()) {
      throw InvalidInputError("no value for placeholder {" + key +
                              "} in template " +
                              std::string(ToString(tmpl.name)));
    }
    out.append(it->second);
    pos = close + 1;
  }
  return out;
}

std::string RenderTypingPrompt(const Triple& premise) {
  return Render(GetTemplate(TemplateName::kTyping),
                {{"s", premise.subject},
                 {"p", premise.predicate},
                 {"o", premise.object}});
}

std::string RenderTransformationPrompt(const TypedPremise& typed,
                                       std::size_t n) {
  if (n == 0) throw InvalidInputError("n must be positive");
  return Render(GetTemplate(TemplateName::kTransformation),
                {{"n+1", std::to_string(n + 1)},
                 {"t_s", typed.subject_type},
                 {"t_o", typed.object_type},
                 {"s", typed.base.subject},
                 {"p", typed.base.predicate},
                 {"o", typed.base.object}});
}

std::string RenderPredictionPrompt(const Inquiry& inquiry) {
  return Render(GetTemplate(TemplateName::kPrediction),
                {{"s", inquiry.premise.subject},
                 {"p", inquiry.premise.predicate},
                 {"o", inquiry.premise.object},
                 {"h_s", inquiry.hypothesis.subject},
                 {"h", inquiry.hypothesis.predicate},
                 {"h_o", inquiry.hypothesis.object}});
}

std::string RenderAttestationPrompt(const Triple& hypothesis) {
  return Render(GetTemplate(TemplateName::kAttestation),
                {{"s", hypothesis.subject},
                 {"h", hypothesis.predicate},
                 {"o", hypothesis.object}});
}

std::string TemplateHash(TemplateName name) {
  return Sha256Hex(GetTemplate(name).body);
}

}  // namespace eidi
