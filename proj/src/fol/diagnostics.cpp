// SPDX-License-Identifier: Apache-2.0
#include "resolute/fol/diagnostics.hpp"

#include <sstream>

namespace resolute::fol {

SourcePos locate(std::string_view text, std::size_t offset) {
  SourcePos pos;
  if (offset > text.size()) offset = text.size();
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

std::string to_string(const ParseDiagnostic& d) {
  std::ostringstream os;
  os << "line " << d.line << ", column " << d.column << ": " << d.message;
  if (!d.token.empty()) os << " (near '" << d.token << "')";
  return os.str();
}

std::string describe(const std::vector<ParseDiagnostic>& ds) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) os << "\n";
    os << "- " << to_string(ds[i]);
  }
  return os.str();
}

}  // namespace resolute::fol
