#pragma once

#include <string>
#include <vector>

namespace intentsum {

struct RougeScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Clipped n-gram overlap. recall = overlap / |ref n-grams|,
// precision = overlap / |cand n-grams|; empty denominators give 0.
// No stemming or stopword removal; callers pass lowercase tokens.
RougeScore rouge_n(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int n);

// Longest common subsequence variant.
RougeScore rouge_l(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference);

size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Percentage of distinct summary n-grams absent from the source n-gram set.
// Throws UndefinedMetric when the summary has fewer than n tokens.
double novel_ngram_ratio(const std::vector<std::string>& summary_tokens,
                         const std::vector<std::string>& source_tokens, int n);

// 0.39 * words/sentences + 11.8 * syllables/words - 15.59, using the
// segmentation primitives. Throws UndefinedMetric when the text has no
// sentences or no word tokens.
double fkgl(std::string_view text);

}  // namespace intentsum
