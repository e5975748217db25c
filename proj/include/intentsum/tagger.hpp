#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace intentsum {

struct TaggedToken {
    std::string token;
    std::string tag;  // Penn Treebank symbol
};

// Greedy left-to-right averaged-perceptron tagger. High-frequency words
// with a near-unambiguous tag bypass the perceptron via the lexicon.
class TaggerModel {
public:
    TaggerModel() = default;

    bool trained() const { return !tags_.empty(); }
    const std::vector<std::string>& tag_set() const { return tags_; }
    const std::map<std::string, std::string>& lexicon() const { return lexicon_; }

    std::vector<TaggedToken> tag(const std::vector<std::string>& tokens) const;

    // Versioned text serialization; save/load round-trips are byte-exact.
    void save(const std::string& path) const;
    static TaggerModel load(const std::string& path);

private:
    friend TaggerModel train_tagger(const std::vector<std::vector<TaggedToken>>& corpus,
                                    int epochs, uint64_t seed);

    std::string predict(const std::vector<std::string>& features) const;

    std::vector<std::string> tags_;
    std::map<std::string, std::string> lexicon_;
    // feature -> (tag -> averaged weight); maps keep serialization stable.
    std::map<std::string, std::map<std::string, double>> weights_;
};

// Feature template: normalized word form, suffixes up to length 3,
// previous one/two tags, surrounding words, capitalization and
// digit/hyphen flags.
std::vector<std::string> tagger_features(const std::vector<std::string>& tokens, size_t i,
                                         const std::string& prev_tag,
                                         const std::string& prev2_tag);

TaggerModel train_tagger(const std::vector<std::vector<TaggedToken>>& corpus, int epochs,
                         uint64_t seed = 1);

// Case-preserving tokenization for tagging: alphanumeric runs with
// internal hyphens/apostrophes; every other non-space scalar becomes a
// single-character token.
std::vector<std::string> tokenize_for_tagging(std::string_view text);

// One sentence per line, tokens as word_TAG separated by spaces.
std::vector<std::vector<TaggedToken>> load_tagged_corpus(const std::string& path);
std::vector<std::vector<TaggedToken>> parse_tagged_corpus(const std::string& content);

}  // namespace intentsum
