#include "intentsum/dataset.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "intentsum/errors.hpp"

namespace intentsum {

std::vector<DatasetRecord> parse_dataset(const std::string& content,
                                         const std::string& origin) {
    std::vector<DatasetRecord> records;
    std::unordered_set<std::string> seen_ids;
    std::istringstream in(content);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(origin + " line " + std::to_string(line_no) + ": " + e.what());
        }
        auto fail = [&](const std::string& what) {
            throw ValidationError(origin + " line " + std::to_string(line_no) + ": " + what);
        };
        if (!obj.is_object()) fail("expected a JSON object");
        if (!obj.contains("id") || !obj["id"].is_string()) fail("missing string field 'id'");
        if (!obj.contains("article") || !obj["article"].is_string()) {
            fail("missing string field 'article'");
        }
        DatasetRecord record;
        record.id = obj["id"].get<std::string>();
        record.article = obj["article"].get<std::string>();
        if (record.id.empty()) fail("empty 'id'");
        if (record.article.empty()) fail("empty 'article'");
        if (!seen_ids.insert(record.id).second) fail("duplicate id '" + record.id + "'");
        if (obj.contains("reference_summary") && !obj["reference_summary"].is_null()) {
            if (!obj["reference_summary"].is_string()) fail("'reference_summary' must be a string");
            record.reference_summary = obj["reference_summary"].get<std::string>();
        }
        if (obj.contains("draft_summary") && !obj["draft_summary"].is_null()) {
            if (!obj["draft_summary"].is_string()) fail("'draft_summary' must be a string");
            record.draft_summary = obj["draft_summary"].get<std::string>();
        }
        if (obj.contains("conciseness_target") && !obj["conciseness_target"].is_null()) {
            if (!obj["conciseness_target"].is_number_integer()) {
                fail("'conciseness_target' must be an integer");
            }
            const int target = obj["conciseness_target"].get<int>();
            if (target < 1) fail("'conciseness_target' must be >= 1");
            record.conciseness_target = target;
        }
        records.push_back(std::move(record));
    }
    if (records.empty()) {
        std::cerr << "warning: dataset " << origin << " contains no records\n";
    }
    return records;
}

std::vector<DatasetRecord> load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dataset: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_dataset(buffer.str(), path);
}

}  // namespace intentsum
