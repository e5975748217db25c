#include "intentsum/segmentation.hpp"

#include <algorithm>
#include <fstream>

#include "intentsum/errors.hpp"
#include "intentsum/unicode.hpp"

namespace intentsum {

namespace {

bool is_terminator(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?'; }

// Case-insensitive check that `text[0..end]` ends with `abbr`, preceded by
// start-of-text or a non-alphanumeric scalar (so "Dr." does not fire inside
// "HDr.").
bool ends_with_abbreviation(const std::vector<char32_t>& text, size_t end,
                            const std::vector<char32_t>& abbr) {
    if (abbr.empty() || abbr.size() > end + 1) return false;
    size_t start = end + 1 - abbr.size();
    for (size_t k = 0; k < abbr.size(); ++k) {
        if (to_lower(text[start + k]) != to_lower(abbr[k])) return false;
    }
    if (start > 0 && is_alnum(text[start - 1])) return false;
    return true;
}

}  // namespace

std::vector<std::string> default_abbreviations() {
    return {"e.g.", "i.e.", "et al.", "Dr.", "Fig.", "Eq.", "vs."};
}

std::vector<std::string> load_abbreviations(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open abbreviation list: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        size_t last = line.find_last_not_of(" \t");
        std::string entry = line.substr(begin, last - begin + 1);
        if (entry.empty() || entry[0] == '#') continue;
        out.push_back(entry);
    }
    return out;
}

std::vector<Sentence> split_sentences(std::string_view text) {
    return split_sentences(text, default_abbreviations());
}

std::vector<Sentence> split_sentences(std::string_view text,
                                      const std::vector<std::string>& abbreviations) {
    const std::vector<char32_t> cps = decode_utf8(text);
    std::vector<std::vector<char32_t>> abbrs;
    abbrs.reserve(abbreviations.size());
    for (const auto& a : abbreviations) abbrs.push_back(decode_utf8(a));

    std::vector<Sentence> sentences;
    const size_t n = cps.size();

    auto emit = [&](size_t start, size_t end) {
        // [start, end] inclusive, start points at a non-space scalar.
        std::vector<char32_t> span(cps.begin() + start, cps.begin() + end + 1);
        Sentence s;
        s.text = encode_utf8(span);
        s.start_offset = start;
        s.tokens = tokenize_words(s.text);
        sentences.push_back(std::move(s));
    };

    size_t i = 0;
    size_t sentence_start = std::string::npos;
    while (i < n) {
        if (sentence_start == std::string::npos) {
            if (is_space(cps[i])) {
                ++i;
                continue;
            }
            sentence_start = i;
        }
        if (!is_terminator(cps[i])) {
            ++i;
            continue;
        }
        // Consume the whole terminator run ("?!", "...").
        size_t run_end = i;
        while (run_end + 1 < n && is_terminator(cps[run_end + 1])) ++run_end;

        size_t next = run_end + 1;
        while (next < n && is_space(cps[next])) ++next;
        bool at_eot = next >= n;
        bool capital_follows = !at_eot && next > run_end + 1 && is_upper(cps[next]);
        bool boundary = at_eot || capital_follows;

        if (boundary && cps[run_end] == U'.') {
            for (const auto& abbr : abbrs) {
                if (ends_with_abbreviation(cps, run_end, abbr)) {
                    boundary = false;
                    break;
                }
            }
        }
        if (boundary) {
            emit(sentence_start, run_end);
            sentence_start = std::string::npos;
        }
        i = run_end + 1;
    }
    if (sentence_start != std::string::npos) {
        size_t last = n - 1;
        while (last > sentence_start && is_space(cps[last])) --last;
        emit(sentence_start, last);
    }
    return sentences;
}

std::vector<std::string> tokenize_words(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char32_t cp : decode_utf8(text)) {
        if (is_alnum(cp)) {
            append_utf8(current, to_lower(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

NgramMultiset ngrams(const std::vector<std::string>& tokens, int n) {
    if (n < 1) throw InvalidArgument("ngrams: n must be >= 1, got " + std::to_string(n));
    NgramMultiset result;
    result.n = n;
    if (tokens.size() < static_cast<size_t>(n)) return result;
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
        std::vector<std::string> gram(tokens.begin() + i, tokens.begin() + i + n);
        ++result.counts[std::move(gram)];
    }
    return result;
}

int count_syllables(std::string_view word) {
    if (word.empty()) throw InvalidArgument("count_syllables: empty word");
    auto is_vowel = [](char32_t cp) {
        switch (to_lower(cp)) {
            case U'a':
            case U'e':
            case U'i':
            case U'o':
            case U'u':
            case U'y':
                return true;
            default:
                return false;
        }
    };
    const std::vector<char32_t> cps = decode_utf8(word);
    int groups = 0;
    size_t last_group_start = 0;
    size_t last_group_end = 0;
    bool in_group = false;
    for (size_t i = 0; i < cps.size(); ++i) {
        if (is_vowel(cps[i])) {
            if (!in_group) {
                in_group = true;
                ++groups;
                last_group_start = i;
            }
            last_group_end = i;
        } else {
            in_group = false;
        }
    }
    // Word-final lone "e" is treated as silent when the word has other
    // vowel groups ("propose" -> 2, "she" -> 1).
    if (groups >= 2 && last_group_start == last_group_end &&
        last_group_end == cps.size() - 1 && to_lower(cps.back()) == U'e') {
        --groups;
    }
    return std::max(groups, 1);
}

}  // namespace intentsum
