// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "resolute/result.hpp"

namespace resolute::llm {

// One recorded exchange. `problem` scopes the entry to a session; the
// field is omitted on disk for single-session transcripts, where it is
// empty. `index` counts entries per (problem, tag) from zero.
struct TranscriptEntry {
  std::string problem;
  std::string tag;
  std::size_t index = 0;
  std::string request_hash;
  std::string response;
};

// JSON-lines transcript: {tag, index, request_hash, response} per line,
// plus "problem" when scoped. Indices must be dense per (problem, tag).
struct Transcript {
  std::vector<TranscriptEntry> entries;

  static Result<Transcript, std::string> load(
      const std::filesystem::path& path);
  static Result<Transcript, std::string> parse(const std::string& text);

  Result<bool, std::string> save(const std::filesystem::path& path) const;
  std::string serialize() const;
};

}  // namespace resolute::llm
