// SPDX-License-Identifier: Apache-2.0
//
// Prints a summary of a transcript file: one line per (problem, tag)
// cursor with its entry count and hash-pinning status. Handy when
// trimming or hand-editing scripted fixtures, where a stale index or a
// forgotten hash shows up as a replay failure much later.
//
// Usage: transcript-info <transcript.jsonl>
#include <cstdio>
#include <map>
#include <string>
#include <utility>

#include "resolute/llm/transcript.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: transcript-info <transcript.jsonl>\n");
    return 1;
  }
  auto loaded = resolute::llm::Transcript::load(argv[1]);
  if (!loaded) {
    std::fprintf(stderr, "%s\n", loaded.error().c_str());
    return 1;
  }
  const auto& entries = loaded.value().entries;

  struct Tally {
    std::size_t count = 0;
    std::size_t pinned = 0;  // entries with a request hash
  };
  std::map<std::pair<std::string, std::string>, Tally> cursors;
  for (const auto& e : entries) {
    Tally& t = cursors[{e.problem, e.tag}];
    ++t.count;
    if (!e.request_hash.empty()) ++t.pinned;
  }

  std::printf("%zu entries, %zu cursors\n", entries.size(), cursors.size());
  for (const auto& [key, tally] : cursors) {
    const auto& [problem, tag] = key;
    const char* pinning = tally.pinned == tally.count ? "pinned"
                          : tally.pinned == 0        ? "unpinned"
                                                     : "mixed";
    std::printf("  %-12s %-10s %3zu  %s\n",
                problem.empty() ? "(unscoped)" : problem.c_str(), tag.c_str(),
                tally.count, pinning);
  }
  return 0;
}
