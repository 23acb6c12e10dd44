// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "resolute/agents/types.hpp"
#include "resolute/result.hpp"

namespace resolute::agents {

// One JSON object (single line, no trailing newline). Field order is
// fixed so identical runs serialize identically.
std::string serialize_record(const RunRecord& record);

Result<RunRecord, std::string> parse_record(const std::string& line);

// JSON-lines file, one record per line, in input order.
Result<bool, std::string> save_records(const std::vector<RunRecord>& records,
                                       const std::filesystem::path& path);
Result<std::vector<RunRecord>, std::string> load_records(
    const std::filesystem::path& path);

}  // namespace resolute::agents
