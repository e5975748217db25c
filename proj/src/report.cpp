#include "intentsum/report.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "intentsum/errors.hpp"
#include "intentsum/intent_metrics.hpp"

namespace intentsum {

namespace {

struct MetricColumn {
    const char* key;            // json/csv name
    const char* header;         // markdown header
    std::optional<double> ReportRow::*field;
    double min;
    double max;
};

// Markdown/CSV column order follows the usual results-table layout:
// ROUGE first, then the control metrics, then surface statistics.
constexpr double kNoBound = std::numeric_limits<double>::infinity();
const MetricColumn kColumns[] = {
    {"rouge1", "R-1", &ReportRow::rouge1, 0.0, 100.0},
    {"rouge2", "R-2", &ReportRow::rouge2, 0.0, 100.0},
    {"rougeL", "R-L", &ReportRow::rougeL, 0.0, 100.0},
    {"k_conciseness", "Con", &ReportRow::k_conciseness, 0.0, kNoBound},
    {"k_narrative", "Nar", &ReportRow::k_narrative, 0.0, 100.0},
    {"k_keywords", "Key", &ReportRow::k_keywords, 0.0, 100.0},
    {"fkgl", "FKGL", &ReportRow::fkgl, -kNoBound, kNoBound},
    {"novel_bigram", "Novel-2", &ReportRow::novel_bigram_pct, 0.0, 100.0},
    {"words", "Words", &ReportRow::words, 0.0, kNoBound},
};

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string cell(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string();
}

}  // namespace

void validate_row(const ReportRow& row) {
    for (const auto& col : kColumns) {
        const auto& value = row.*(col.field);
        if (!value) continue;
        if (*value < col.min || *value > col.max || std::isnan(*value)) {
            throw ValidationError("report row '" + row.id + "': " + col.key + " = " +
                                  format_double(*value) + " is outside its range");
        }
    }
}

EvalReport aggregate_report(std::vector<ReportRow> rows) {
    EvalReport report;
    report.dataset_mean.id = "mean";
    for (const auto& row : rows) validate_row(row);
    for (const auto& col : kColumns) {
        std::vector<double> values;
        int nulls = 0;
        for (const auto& row : rows) {
            const auto& value = row.*(col.field);
            if (value) {
                values.push_back(*value);
            } else {
                ++nulls;
            }
        }
        if (!values.empty()) {
            report.dataset_mean.*(col.field) = aggregate_metric(values);
        }
        if (nulls > 0) report.exclusions[col.key] = nulls;
    }
    report.rows = std::move(rows);
    return report;
}

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "csv") return ReportFormat::kCsv;
    if (name == "json") return ReportFormat::kJson;
    if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
    throw InvalidArgument("unknown report format: " + name);
}

namespace {

std::string render_csv(const EvalReport& report) {
    std::string out = "id";
    for (const auto& col : kColumns) out += std::string(",") + col.key;
    out += ",gamma,seed,truncated\n";
    auto line = [&](const ReportRow& row) {
        std::string s = row.id;
        for (const auto& col : kColumns) s += "," + cell(row.*(col.field));
        s += "," + (row.gamma ? format_double(*row.gamma) : std::string());
        s += "," + (row.seed ? std::to_string(*row.seed) : std::string());
        s += "," + (row.truncated ? std::string(*row.truncated ? "true" : "false")
                                  : std::string());
        return s + "\n";
    };
    for (const auto& row : report.rows) out += line(row);
    out += line(report.dataset_mean);
    return out;
}

std::string render_markdown(const EvalReport& report) {
    std::string out = "| id |";
    for (const auto& col : kColumns) out += std::string(" ") + col.header + " |";
    out += "\n|---|";
    for (size_t i = 0; i < std::size(kColumns); ++i) out += "---|";
    out += "\n";
    auto line = [&](const ReportRow& row) {
        std::string s = "| " + row.id + " |";
        for (const auto& col : kColumns) {
            const auto& value = row.*(col.field);
            s += " " + (value ? format_double(*value) : std::string("-")) + " |";
        }
        return s + "\n";
    };
    for (const auto& row : report.rows) out += line(row);
    out += line(report.dataset_mean);
    if (!report.exclusions.empty()) {
        out += "\nExcluded from means (undefined metric):";
        bool first = true;
        for (const auto& [key, count] : report.exclusions) {
            out += (first ? " " : ", ") + key + "=" + std::to_string(count);
            first = false;
        }
        out += "\n";
    }
    return out;
}

nlohmann::json row_to_json(const ReportRow& row) {
    nlohmann::json j;
    j["id"] = row.id;
    for (const auto& col : kColumns) {
        const auto& value = row.*(col.field);
        if (value) {
            j[col.key] = *value;
        } else {
            j[col.key] = nullptr;
        }
    }
    if (row.gamma) j["gamma"] = *row.gamma;
    if (row.seed) j["seed"] = *row.seed;
    if (row.truncated) j["truncated"] = *row.truncated;
    return j;
}

ReportRow row_from_json(const nlohmann::json& j) {
    ReportRow row;
    row.id = j.at("id").get<std::string>();
    for (const auto& col : kColumns) {
        if (j.contains(col.key) && !j[col.key].is_null()) {
            row.*(col.field) = j[col.key].get<double>();
        }
    }
    if (j.contains("gamma")) row.gamma = j["gamma"].get<double>();
    if (j.contains("seed")) row.seed = j["seed"].get<uint64_t>();
    if (j.contains("truncated")) row.truncated = j["truncated"].get<bool>();
    return row;
}

}  // namespace

nlohmann::json report_to_json(const EvalReport& report) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) j["rows"].push_back(row_to_json(row));
    j["dataset_mean"] = row_to_json(report.dataset_mean);
    j["exclusions"] = report.exclusions;
    return j;
}

EvalReport report_from_json(const nlohmann::json& j) {
    EvalReport report;
    for (const auto& row : j.at("rows")) report.rows.push_back(row_from_json(row));
    report.dataset_mean = row_from_json(j.at("dataset_mean"));
    if (j.contains("exclusions")) {
        for (const auto& [key, count] : j["exclusions"].items()) {
            report.exclusions[key] = count.get<int>();
        }
    }
    return report;
}

std::string render_report(const EvalReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::kCsv: return render_csv(report);
        case ReportFormat::kMarkdown: return render_markdown(report);
        default: return report_to_json(report).dump(2) + "\n";
    }
}

void write_report_files(const EvalReport& report, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const std::pair<ReportFormat, const char*> targets[] = {
        {ReportFormat::kCsv, "report.csv"},
        {ReportFormat::kJson, "report.json"},
        {ReportFormat::kMarkdown, "report.md"},
    };
    for (const auto& [format, name] : targets) {
        const fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write report: " + path.string());
        out << render_report(report, format);
        if (!out) throw IoError("failed writing report: " + path.string());
    }
}

}  // namespace intentsum
