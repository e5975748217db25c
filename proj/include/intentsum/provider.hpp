#pragma once

#include <memory>
#include <string>
#include <vector>

#include "intentsum/distribution.hpp"

namespace intentsum {

// Text <-> token-id codec accompanying a provider.
class Codec {
public:
    virtual ~Codec() = default;
    virtual std::vector<int> encode(const std::string& text) const = 0;
    virtual std::string decode(const std::vector<int>& ids) const = 0;
};

// Next-token distribution source. Must be deterministic for a fixed
// context; all stochasticity lives in the sampler.
class Provider {
public:
    virtual ~Provider() = default;
    // May throw ProviderError.
    virtual TokenDistribution next_logprobs(const std::vector<int>& context) = 0;
    virtual int end_token() const = 0;
    virtual int vocab_size() const = 0;
    // Providers not safe for concurrent next_logprobs calls are
    // serialized by the harness.
    virtual bool concurrency_safe() const { return false; }
    // True once any distribution has been reconstructed from partial
    // (top-k) logprobs; surfaced in report metadata.
    virtual bool topk_approximation() const { return false; }
};

// Word-level codec over a fixed vocabulary. Id 0 is <unk>, id 1 is the
// end-of-sequence token; text is tokenized with tokenize_words.
class VocabCodec : public Codec {
public:
    static constexpr int kUnkId = 0;
    static constexpr int kEndId = 1;

    // words must start with the two reserved entries "<unk>", "</s>".
    explicit VocabCodec(std::vector<std::string> words);

    std::vector<int> encode(const std::string& text) const override;
    std::string decode(const std::vector<int>& ids) const override;

    int size() const { return static_cast<int>(words_.size()); }
    // Returns kUnkId for out-of-vocabulary words.
    int id_of(const std::string& word) const;
    const std::string& word_of(int id) const;

private:
    std::vector<std::string> words_;
    std::vector<std::pair<std::string, int>> index_;  // sorted by word
};

}  // namespace intentsum
