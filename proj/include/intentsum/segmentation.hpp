#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace intentsum {

// One sentence of a source text. Offsets are indices into the sequence of
// Unicode scalar values of the source, not byte offsets.
struct Sentence {
    std::string text;
    size_t start_offset = 0;
    std::vector<std::string> tokens;  // lowercase word tokens, in order
};

// Multiset of token n-grams, keyed by the n-token tuple.
struct NgramMultiset {
    int n = 1;
    std::map<std::vector<std::string>, int> counts;

    int total() const {
        int sum = 0;
        for (const auto& [gram, count] : counts) sum += count;
        return sum;
    }
};

// Sentence terminators are '.', '!', '?' followed by whitespace and a
// capital letter, or by end of text. A trailing '.' that completes a
// listed abbreviation does not end a sentence.
std::vector<std::string> default_abbreviations();

// One abbreviation per line, UTF-8, '#' starts a comment line.
std::vector<std::string> load_abbreviations(const std::string& path);

std::vector<Sentence> split_sentences(std::string_view text);
std::vector<Sentence> split_sentences(std::string_view text,
                                      const std::vector<std::string>& abbreviations);

// Lowercased maximal runs of alphanumeric scalar values (categories L*/N*);
// everything else separates.
std::vector<std::string> tokenize_words(std::string_view text);

// Sliding-window multiset; throws InvalidArgument when n < 1.
NgramMultiset ngrams(const std::vector<std::string>& tokens, int n);

// Vowel-group count (a,e,i,o,u,y runs), with a word-final silent "e"
// subtracted when another group exists; never less than 1.
int count_syllables(std::string_view word);

}  // namespace intentsum
