// Brute-force reference implementations used only by tests. They stay
// deliberately naive and independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using Tokens = std::vector<std::string>;

// Clipped n-gram overlap by direct scanning, no hash maps.
inline long long clipped_overlap(const Tokens& cand, const Tokens& ref, int n) {
    auto gram_at = [n](const Tokens& t, size_t i) {
        return Tokens(t.begin() + i, t.begin() + i + n);
    };
    auto gram_count = [&](const Tokens& t, const Tokens& gram) {
        long long count = 0;
        if (t.size() < static_cast<size_t>(n)) return count;
        for (size_t i = 0; i + n <= t.size(); ++i) {
            if (gram_at(t, i) == gram) ++count;
        }
        return count;
    };
    long long overlap = 0;
    if (cand.size() < static_cast<size_t>(n)) return 0;
    for (size_t i = 0; i + n <= cand.size(); ++i) {
        const Tokens gram = gram_at(cand, i);
        bool seen_before = false;
        for (size_t j = 0; j < i; ++j) {
            if (gram_at(cand, j) == gram) {
                seen_before = true;
                break;
            }
        }
        if (seen_before) continue;
        overlap += std::min(gram_count(cand, gram), gram_count(ref, gram));
    }
    return overlap;
}

inline long long ngram_total(const Tokens& t, int n) {
    return t.size() < static_cast<size_t>(n)
               ? 0
               : static_cast<long long>(t.size()) - n + 1;
}

inline bool is_subsequence(const Tokens& needle, const Tokens& haystack) {
    size_t i = 0;
    for (size_t j = 0; j < haystack.size() && i < needle.size(); ++j) {
        if (haystack[j] == needle[i]) ++i;
    }
    return i == needle.size();
}

// LCS by enumerating every subsequence of `a` (2^|a| masks).
inline size_t lcs_all_subsequences(const Tokens& a, const Tokens& b) {
    size_t best = 0;
    for (size_t mask = 0; mask < (size_t{1} << a.size()); ++mask) {
        Tokens sub;
        for (size_t i = 0; i < a.size(); ++i) {
            if (mask & (size_t{1} << i)) sub.push_back(a[i]);
        }
        if (sub.size() > best && is_subsequence(sub, b)) best = sub.size();
    }
    return best;
}

// Vowel runs located via string scanning on an ASCII lowercase copy.
inline int syllables(const std::string& word) {
    std::string lower;
    for (char c : word) {
        lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    }
    const std::string vowels = "aeiouy";
    std::vector<std::pair<size_t, size_t>> runs;  // [start, end)
    size_t pos = 0;
    while (true) {
        const size_t start = lower.find_first_of(vowels, pos);
        if (start == std::string::npos) break;
        size_t end = lower.find_first_not_of(vowels, start);
        if (end == std::string::npos) end = lower.size();
        runs.emplace_back(start, end);
        pos = end;
    }
    int count = static_cast<int>(runs.size());
    if (count >= 2) {
        const auto& last = runs.back();
        if (last.second - last.first == 1 && last.second == lower.size() &&
            lower.back() == 'e') {
            --count;
        }
    }
    return std::max(count, 1);
}

// Set-semantics novel n-gram percentage.
inline double novel_ngram_pct(const Tokens& summary, const Tokens& source, int n) {
    std::set<Tokens> source_set, summary_set;
    for (size_t i = 0; i + n <= source.size(); ++i) {
        source_set.insert(Tokens(source.begin() + i, source.begin() + i + n));
    }
    for (size_t i = 0; i + n <= summary.size(); ++i) {
        summary_set.insert(Tokens(summary.begin() + i, summary.begin() + i + n));
    }
    size_t novel = 0;
    for (const auto& gram : summary_set) {
        if (!source_set.count(gram)) ++novel;
    }
    return 100.0 * static_cast<double>(novel) / static_cast<double>(summary_set.size());
}

inline double mean(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace oracles
