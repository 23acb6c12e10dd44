// SPDX-License-Identifier: Apache-2.0
#include "resolute/agents/prompts.hpp"

#include "resolute/agents/prompts_data.hpp"

namespace resolute::agents {

PromptTemplates default_prompts() {
  PromptTemplates t;
  t.formulate = detail::kFormulateTemplate;
  t.refine = detail::kRefineTemplate;
  t.judge = detail::kJudgeTemplate;
  return t;
}

std::string render_template(
    std::string_view tmpl, const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    std::size_t open = tmpl.find('{', pos);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    std::size_t close = tmpl.find('}', open + 1);
    if (close == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    auto it = values.find(std::string(tmpl.substr(open + 1, close - open - 1)));
    if (it == values.end()) {
      out.append(tmpl.substr(pos, open + 1 - pos));
      pos = open + 1;
      continue;
    }
    out.append(tmpl.substr(pos, open - pos));
    out.append(it->second);
    pos = close + 1;
  }
  return out;
}

}  // namespace resolute::agents
