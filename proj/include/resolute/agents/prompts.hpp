// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <string_view>

namespace resolute::agents {

// The three prompt templates driving the loop. Placeholders are written
// {name}; the bundled defaults come from resources/prompts/ and are
// embedded at build time.
struct PromptTemplates {
  std::string formulate;  // {context} {question}
  std::string refine;     // {context} {question} {formulation} {errors}
  std::string judge;      // {context} {question} {formulation_a} {formulation_b}
};

PromptTemplates default_prompts();

// Single-pass placeholder substitution: every {key} present in `values`
// is replaced; anything else is copied verbatim. Substituted values are
// not rescanned.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values);

}  // namespace resolute::agents
