#pragma once

#include <string>
#include <vector>

#include "intentsum/segmentation.hpp"

namespace intentsum {

enum class NarrativeLabel { kFirst, kThird };

const char* to_string(NarrativeLabel label);

// Heuristic perspective classifier: first person iff the sentence starts
// with "we"/"our" or contains ", we"/", our" at a word boundary,
// case-insensitively. Everything else is third person.
NarrativeLabel classify_narrative(const Sentence& sentence);

// |target - |summary||.
int k_conciseness(int target, const std::vector<Sentence>& summary);

// Percentage of sentences classified as the target perspective.
double k_narrative(NarrativeLabel target, const std::vector<Sentence>& summary);

// Keyword coverage: 100 x ROUGE-1 recall with the (flattened) keyword list
// as reference and the summary tokens as candidate.
double k_keywords(const std::vector<std::string>& keywords,
                  const std::vector<std::string>& summary_tokens);

// Arithmetic mean; the dataset-level value of any per-summary metric.
double aggregate_metric(const std::vector<double>& values);

}  // namespace intentsum
