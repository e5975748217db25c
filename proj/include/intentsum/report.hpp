#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace intentsum {

// Per-document metric row. ROUGE values are F1 x 100; k_narrative,
// k_keywords and novel_bigram_pct are percentages; k_conciseness is a
// sentence-count deviation. Absent values were undefined for the record
// and are excluded from the dataset mean.
struct ReportRow {
    std::string id;
    std::optional<double> rouge1;
    std::optional<double> rouge2;
    std::optional<double> rougeL;
    std::optional<double> k_conciseness;
    std::optional<double> k_narrative;
    std::optional<double> k_keywords;
    std::optional<double> fkgl;
    std::optional<double> novel_bigram_pct;
    std::optional<double> words;  // word-token count of the summary

    std::optional<double> gamma;
    std::optional<uint64_t> seed;
    std::optional<bool> truncated;
};

struct EvalReport {
    std::vector<ReportRow> rows;
    ReportRow dataset_mean;              // id "mean"; arithmetic mean of non-null values
    std::map<std::string, int> exclusions;  // metric -> count of null records
};

// Throws ValidationError when a value is outside its documented range.
void validate_row(const ReportRow& row);

// Arithmetic mean of the non-null per-record values, plus exclusion counts.
EvalReport aggregate_report(std::vector<ReportRow> rows);

enum class ReportFormat { kCsv, kJson, kMarkdown };
ReportFormat report_format_from_string(const std::string& name);

std::string render_report(const EvalReport& report, ReportFormat format);

nlohmann::json report_to_json(const EvalReport& report);
EvalReport report_from_json(const nlohmann::json& j);

void write_report_files(const EvalReport& report, const std::string& out_dir);

}  // namespace intentsum
