#pragma once

#include <string>
#include <vector>

#include "intentsum/dataset.hpp"
#include "intentsum/report.hpp"
#include "intentsum/run_config.hpp"

namespace intentsum {

struct GenerateOutcome {
    int generated = 0;
    int skipped = 0;   // resume: output already present
    std::vector<std::string> failures;  // "id: error"

    bool ok() const { return failures.empty(); }
};

// Filesystem-safe summary filename for a record id (percent-encoding).
std::string summary_filename(const std::string& id);

// Deterministic per-record sampling seed, independent of record order.
uint64_t record_seed(uint64_t run_seed, const std::string& id);

// Tail-truncates `text` to at most `max_words` word tokens, preserving the
// original bytes of the kept prefix.
std::string truncate_words(const std::string& text, size_t max_words);

// Generates one summary file per record under <output_dir>/summaries/,
// skipping records whose output already exists. Provider errors are
// collected per record; the run continues.
GenerateOutcome run_generate(const std::vector<DatasetRecord>& records,
                             const RunConfig& config);

// Scores the summaries in `summaries_dir` against their records and
// aggregates the dataset mean. Every summary must match a record id.
EvalReport run_eval(const std::vector<DatasetRecord>& records,
                    const std::string& summaries_dir, const RunConfig& config);

void write_run_meta(const RunConfig& config, size_t record_count);

}  // namespace intentsum
