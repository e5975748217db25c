#include "intentsum/toy_lm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "intentsum/errors.hpp"
#include "intentsum/segmentation.hpp"

namespace intentsum {

ToyLmProvider::ToyLmProvider(const std::vector<std::vector<int>>& corpus, int vocab_size,
                             ToyLmSpec spec, int end_token)
    : vocab_size_(vocab_size), end_token_(end_token), spec_(std::move(spec)) {
    if (corpus.empty()) throw InvalidArgument("toy lm: empty corpus");
    if (vocab_size < 2) throw InvalidArgument("toy lm: vocab_size must be >= 2");
    if (end_token < 0 || end_token >= vocab_size) {
        throw InvalidArgument("toy lm: end_token out of range");
    }
    if (spec_.keyword_bonus < 0.0) throw InvalidArgument("toy lm: keyword_bonus must be >= 0");
    for (int id : spec_.keyword_tokens) {
        if (id < 0 || id >= vocab_size) throw InvalidArgument("toy lm: keyword token out of range");
    }

    const size_t v = static_cast<size_t>(vocab_size);
    std::vector<long long> counts(v * v, 0);
    std::vector<long long> row_totals(v, 0);
    for (const auto& seq : corpus) {
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            int a = seq[i], b = seq[i + 1];
            if (a < 0 || a >= vocab_size || b < 0 || b >= vocab_size) {
                throw InvalidArgument("toy lm: corpus token out of range");
            }
            ++counts[a * v + b];
            ++row_totals[a];
        }
    }
    base_logprobs_.resize(v * v);
    for (size_t a = 0; a < v; ++a) {
        const double denom = static_cast<double>(row_totals[a] + vocab_size);
        for (size_t b = 0; b < v; ++b) {
            base_logprobs_[a * v + b] = std::log((counts[a * v + b] + 1) / denom);
        }
    }
}

TokenDistribution ToyLmProvider::bigram_logprobs(int prev_token) const {
    if (prev_token < 0 || prev_token >= vocab_size_) {
        throw ProviderError("toy lm: context token out of range");
    }
    const size_t v = static_cast<size_t>(vocab_size_);
    std::vector<double> row(base_logprobs_.begin() + prev_token * v,
                            base_logprobs_.begin() + (prev_token + 1) * v);
    return TokenDistribution{std::move(row)};
}

bool ToyLmProvider::contains_trigger(const std::vector<int>& context,
                                     const std::vector<int>& phrase) {
    if (phrase.empty()) return false;
    return std::search(context.begin(), context.end(), phrase.begin(), phrase.end()) !=
           context.end();
}

TokenDistribution ToyLmProvider::next_logprobs(const std::vector<int>& context) {
    if (context.empty()) throw ProviderError("toy lm: empty context");
    TokenDistribution base = bigram_logprobs(context.back());
    if (spec_.keyword_bonus == 0.0 || !contains_trigger(context, spec_.trigger_phrase)) {
        return base;
    }
    std::vector<double> logits = std::move(base.logprobs);
    for (int id : spec_.keyword_tokens) logits[id] += spec_.keyword_bonus;
    return log_softmax(std::move(logits));
}

std::unique_ptr<ToyLmProvider> build_toy_lm(const std::vector<std::vector<int>>& corpus,
                                            int vocab_size, ToyLmSpec spec, int end_token) {
    return std::make_unique<ToyLmProvider>(corpus, vocab_size, std::move(spec), end_token);
}

ToyTextLm build_toy_text_lm(const std::string& corpus_text, double keyword_bonus,
                            const std::vector<std::string>& keywords,
                            const std::string& trigger_phrase) {
    std::vector<std::vector<std::string>> lines;
    {
        std::istringstream in(corpus_text);
        std::string line;
        while (std::getline(in, line)) {
            auto tokens = tokenize_words(line);
            if (!tokens.empty()) lines.push_back(std::move(tokens));
        }
    }
    if (lines.empty()) throw InvalidArgument("toy lm: empty corpus text");

    std::vector<std::string> vocab = {"<unk>", "</s>"};
    auto intern = [&vocab](const std::string& word) {
        for (size_t i = 0; i < vocab.size(); ++i) {
            if (vocab[i] == word) return static_cast<int>(i);
        }
        vocab.push_back(word);
        return static_cast<int>(vocab.size() - 1);
    };

    std::vector<std::vector<int>> corpus;
    corpus.reserve(lines.size());
    for (const auto& tokens : lines) {
        std::vector<int> seq;
        seq.reserve(tokens.size() + 1);
        for (const auto& word : tokens) seq.push_back(intern(word));
        seq.push_back(VocabCodec::kEndId);
        corpus.push_back(std::move(seq));
    }

    ToyLmSpec spec;
    spec.keyword_bonus = keyword_bonus;
    for (const auto& kw : keywords) {
        for (const auto& word : tokenize_words(kw)) spec.keyword_tokens.push_back(intern(word));
    }
    for (const auto& word : tokenize_words(trigger_phrase)) {
        spec.trigger_phrase.push_back(intern(word));
    }

    ToyTextLm result;
    result.provider = std::make_shared<ToyLmProvider>(corpus, static_cast<int>(vocab.size()),
                                                      std::move(spec), VocabCodec::kEndId);
    result.codec = std::make_shared<VocabCodec>(std::move(vocab));
    return result;
}

}  // namespace intentsum
