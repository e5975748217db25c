#include "intentsum/metrics.hpp"

#include <algorithm>
#include <set>
#include <string_view>
#include <unordered_map>

#include "intentsum/errors.hpp"
#include "intentsum/segmentation.hpp"

namespace intentsum {

namespace {

double f1_of(double precision, double recall) {
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

// N-grams keyed as '\x1e'-joined strings; cheaper than tuple keys on the
// dataset-scale scoring path.
std::unordered_map<std::string, int> ngram_counts(const std::vector<std::string>& tokens,
                                                  int n) {
    std::unordered_map<std::string, int> counts;
    if (tokens.size() < static_cast<size_t>(n)) return counts;
    counts.reserve(tokens.size());
    std::string key;
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
        key.clear();
        for (int k = 0; k < n; ++k) {
            if (k) key.push_back('\x1e');
            key.append(tokens[i + k]);
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace

RougeScore rouge_n(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int n) {
    if (n < 1) throw InvalidArgument("rouge_n: n must be >= 1, got " + std::to_string(n));
    const auto cand = ngram_counts(candidate, n);
    const auto ref = ngram_counts(reference, n);
    long long cand_total = 0, ref_total = 0, overlap = 0;
    for (const auto& [gram, count] : cand) cand_total += count;
    for (const auto& [gram, count] : ref) ref_total += count;
    const auto& smaller = cand.size() <= ref.size() ? cand : ref;
    const auto& larger = cand.size() <= ref.size() ? ref : cand;
    for (const auto& [gram, count] : smaller) {
        auto it = larger.find(gram);
        if (it != larger.end()) overlap += std::min(count, it->second);
    }
    RougeScore score;
    score.precision = cand_total > 0 ? static_cast<double>(overlap) / cand_total : 0.0;
    score.recall = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
    score.f1 = f1_of(score.precision, score.recall);
    return score;
}

size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) return 0;
    // Two-row DP over sequence prefixes.
    std::vector<size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        for (size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1]) {
                cur[j] = prev[j - 1] + 1;
            } else {
                cur[j] = std::max(prev[j], cur[j - 1]);
            }
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

RougeScore rouge_l(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference) {
    const size_t lcs = lcs_length(candidate, reference);
    RougeScore score;
    score.precision = candidate.empty() ? 0.0 : static_cast<double>(lcs) / candidate.size();
    score.recall = reference.empty() ? 0.0 : static_cast<double>(lcs) / reference.size();
    score.f1 = f1_of(score.precision, score.recall);
    return score;
}

double novel_ngram_ratio(const std::vector<std::string>& summary_tokens,
                         const std::vector<std::string>& source_tokens, int n) {
    if (n < 1) throw InvalidArgument("novel_ngram_ratio: n must be >= 1");
    if (summary_tokens.size() < static_cast<size_t>(n)) {
        throw UndefinedMetric("novel_ngram_ratio: summary has fewer than n tokens");
    }
    const NgramMultiset summary = ngrams(summary_tokens, n);
    const NgramMultiset source = ngrams(source_tokens, n);
    size_t novel = 0;
    for (const auto& [gram, count] : summary.counts) {
        if (source.counts.find(gram) == source.counts.end()) ++novel;
    }
    return 100.0 * static_cast<double>(novel) / summary.counts.size();
}

double fkgl(std::string_view text) {
    const std::vector<Sentence> sentences = split_sentences(text);
    size_t words = 0, syllables = 0;
    for (const Sentence& s : sentences) {
        for (const std::string& token : s.tokens) {
            ++words;
            syllables += count_syllables(token);
        }
    }
    if (sentences.empty() || words == 0) {
        throw UndefinedMetric("fkgl: text has no sentences or no words");
    }
    return 0.39 * static_cast<double>(words) / sentences.size() +
           11.8 * static_cast<double>(syllables) / words - 15.59;
}

}  // namespace intentsum
