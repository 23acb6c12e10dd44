// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace resolute::fol {

// A parse or validation problem, positioned inside the text it came from.
// `offset` is a byte offset; line and column are 1-based (column in bytes).
struct ParseDiagnostic {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;
  std::string message;
  std::string token;
};

struct SourcePos {
  int line = 1;
  int column = 1;
};

SourcePos locate(std::string_view text, std::size_t offset);

std::string to_string(const ParseDiagnostic& d);
std::string describe(const std::vector<ParseDiagnostic>& ds);

}  // namespace resolute::fol
