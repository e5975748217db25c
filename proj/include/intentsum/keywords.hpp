#pragma once

#include <set>
#include <string>
#include <vector>

#include "intentsum/tagger.hpp"

namespace intentsum {

// Guidance keywords: lowercase, duplicates removed keeping the first
// occurrence.
struct KeywordSet {
    std::vector<std::string> keywords;

    bool empty() const { return keywords.empty(); }
    std::string comma_separated() const;
};

// Tag classes kept as keywords: nouns, verbs, adjectives, foreign words
// and symbols.
const std::set<std::string>& keyword_pos_tags();

// The pure tag filter: keep Table-class tokens, lowercase, dedupe.
KeywordSet filter_keywords(const std::vector<TaggedToken>& tagged);

// Tokenize a draft summary, tag it, and filter.
KeywordSet extract_keywords(const std::string& draft_summary, const TaggerModel& model);

}  // namespace intentsum
