#pragma once

#include <memory>
#include <string>
#include <vector>

#include "intentsum/provider.hpp"

namespace intentsum {

// Add-one-smoothed bigram language model with an optional keyword bonus:
// when the context contains the trigger phrase, `keyword_bonus` is added
// to the logits of `keyword_tokens` before renormalization. Makes guided
// decoding analytically checkable.
struct ToyLmSpec {
    double keyword_bonus = 0.0;
    std::vector<int> keyword_tokens;
    std::vector<int> trigger_phrase;
};

class ToyLmProvider : public Provider {
public:
    ToyLmProvider(const std::vector<std::vector<int>>& corpus, int vocab_size,
                  ToyLmSpec spec, int end_token = 1);

    TokenDistribution next_logprobs(const std::vector<int>& context) override;
    int end_token() const override { return end_token_; }
    int vocab_size() const override { return vocab_size_; }
    bool concurrency_safe() const override { return true; }

    // Plain smoothed bigram row without the keyword bonus.
    TokenDistribution bigram_logprobs(int prev_token) const;

    static bool contains_trigger(const std::vector<int>& context,
                                 const std::vector<int>& phrase);

    const ToyLmSpec& spec() const { return spec_; }

private:
    int vocab_size_;
    int end_token_;
    ToyLmSpec spec_;
    std::vector<double> base_logprobs_;  // row-major V x V
};

std::unique_ptr<ToyLmProvider> build_toy_lm(const std::vector<std::vector<int>>& corpus,
                                            int vocab_size, ToyLmSpec spec,
                                            int end_token = 1);

// Word-level toy model built from text: one training sentence per line,
// an end token appended to each. Words in `keywords` or `trigger_phrase`
// that are missing from the corpus are appended to the vocabulary.
struct ToyTextLm {
    std::shared_ptr<VocabCodec> codec;
    std::shared_ptr<ToyLmProvider> provider;
};

ToyTextLm build_toy_text_lm(const std::string& corpus_text, double keyword_bonus,
                            const std::vector<std::string>& keywords,
                            const std::string& trigger_phrase);

}  // namespace intentsum
