// SPDX-License-Identifier: Apache-2.0
#include "resolute/llm/transcript.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace resolute::llm {

Result<Transcript, std::string> Transcript::load(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return "cannot open transcript: " + path.string();
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto parsed = parse(buffer.str());
  if (!parsed) return path.string() + ": " + parsed.error();
  return parsed;
}

Result<Transcript, std::string> Transcript::parse(const std::string& text) {
  Transcript t;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      return "line " + std::to_string(line_no) + ": not a JSON object";
    for (const char* field : {"tag", "index", "response"})
      if (!j.contains(field))
        return "line " + std::to_string(line_no) + ": missing field '" +
               field + "'";
    TranscriptEntry e;
    e.problem = j.value("problem", "");
    e.tag = j.at("tag").get<std::string>();
    e.index = j.at("index").get<std::size_t>();
    e.request_hash = j.value("request_hash", "");
    e.response = j.at("response").get<std::string>();
    t.entries.push_back(std::move(e));
  }
  return t;
}

std::string Transcript::serialize() const {
  std::string out;
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    if (!e.problem.empty()) j["problem"] = e.problem;
    j["tag"] = e.tag;
    j["index"] = e.index;
    j["request_hash"] = e.request_hash;
    j["response"] = e.response;
    out += j.dump();
    out += "\n";
  }
  return out;
}

Result<bool, std::string> Transcript::save(
    const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) return "cannot write transcript: " + path.string();
  out << serialize();
  out.close();
  if (!out) return "write failed: " + path.string();
  return true;
}

}  // namespace resolute::llm
