#pragma once

#include <optional>
#include <string>
#include <vector>

namespace intentsum {

struct DatasetRecord {
    std::string id;
    std::string article;
    std::optional<std::string> reference_summary;
    std::optional<std::string> draft_summary;       // keyword-model input
    std::optional<int> conciseness_target;          // per-record override
};

// JSON-lines, one record per line. Parse and validation errors name the
// offending line; an empty file yields an empty list and a warning on
// stderr.
std::vector<DatasetRecord> load_dataset(const std::string& path);
std::vector<DatasetRecord> parse_dataset(const std::string& content, const std::string& origin);

}  // namespace intentsum
