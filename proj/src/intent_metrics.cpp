#include "intentsum/intent_metrics.hpp"

#include <numeric>

#include "intentsum/errors.hpp"
#include "intentsum/metrics.hpp"
#include "intentsum/unicode.hpp"

namespace intentsum {

namespace {

// ", we" / ", our" with a word boundary after the pronoun, so ", well"
// and ", ours" do not fire.
bool contains_comma_fpp(const std::vector<char32_t>& lower) {
    static const std::vector<std::u32string> patterns = {U", we", U", our"};
    for (const auto& pat : patterns) {
        if (lower.size() < pat.size()) continue;
        for (size_t i = 0; i + pat.size() <= lower.size(); ++i) {
            bool match = true;
            for (size_t k = 0; k < pat.size(); ++k) {
                if (lower[i + k] != pat[k]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            size_t after = i + pat.size();
            if (after >= lower.size() || !is_alnum(lower[after])) return true;
        }
    }
    return false;
}

}  // namespace

const char* to_string(NarrativeLabel label) {
    return label == NarrativeLabel::kFirst ? "first" : "third";
}

NarrativeLabel classify_narrative(const Sentence& sentence) {
    if (sentence.text.empty()) throw InvalidArgument("classify_narrative: empty sentence");
    if (!sentence.tokens.empty() &&
        (sentence.tokens.front() == "we" || sentence.tokens.front() == "our")) {
        return NarrativeLabel::kFirst;
    }
    std::vector<char32_t> lower = decode_utf8(sentence.text);
    for (char32_t& cp : lower) cp = to_lower(cp);
    if (contains_comma_fpp(lower)) return NarrativeLabel::kFirst;
    return NarrativeLabel::kThird;
}

int k_conciseness(int target, const std::vector<Sentence>& summary) {
    if (target < 1) throw InvalidArgument("k_conciseness: target must be >= 1");
    long long diff = static_cast<long long>(target) - static_cast<long long>(summary.size());
    return static_cast<int>(diff < 0 ? -diff : diff);
}

double k_narrative(NarrativeLabel target, const std::vector<Sentence>& summary) {
    if (summary.empty()) throw UndefinedMetric("k_narrative: empty summary");
    size_t matches = 0;
    for (const Sentence& s : summary) {
        if (classify_narrative(s) == target) ++matches;
    }
    return 100.0 * static_cast<double>(matches) / summary.size();
}

double k_keywords(const std::vector<std::string>& keywords,
                  const std::vector<std::string>& summary_tokens) {
    if (keywords.empty()) throw InvalidArgument("k_keywords: empty keyword list");
    // Multi-word keywords are flattened to unigrams before the recall
    // computation, which is unigram-based.
    std::vector<std::string> reference;
    for (const std::string& kw : keywords) {
        for (std::string& token : tokenize_words(kw)) reference.push_back(std::move(token));
    }
    if (reference.empty()) {
        throw InvalidArgument("k_keywords: keywords contain no word tokens");
    }
    return 100.0 * rouge_n(summary_tokens, reference, 1).recall;
}

double aggregate_metric(const std::vector<double>& values) {
    if (values.empty()) throw UndefinedMetric("aggregate_metric: no values");
    double sum = std::accumulate(values.begin(), values.end(), 0.0);
    return sum / static_cast<double>(values.size());
}

}  // namespace intentsum
