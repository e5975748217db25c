#include "intentsum/keywords.hpp"

#include <unordered_set>

#include "intentsum/unicode.hpp"

namespace intentsum {

std::string KeywordSet::comma_separated() const {
    std::string out;
    for (size_t i = 0; i < keywords.size(); ++i) {
        if (i) out += ", ";
        out += keywords[i];
    }
    return out;
}

const std::set<std::string>& keyword_pos_tags() {
    static const std::set<std::string> tags = {
        "FW", "JJ", "JJR", "JJS", "NN", "NNS", "NNP", "NNPS",
        "SYM", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    };
    return tags;
}

KeywordSet filter_keywords(const std::vector<TaggedToken>& tagged) {
    KeywordSet result;
    std::unordered_set<std::string> seen;
    const auto& keep = keyword_pos_tags();
    for (const TaggedToken& tt : tagged) {
        if (keep.find(tt.tag) == keep.end()) continue;
        std::string word = lowercase(tt.token);
        if (seen.insert(word).second) result.keywords.push_back(std::move(word));
    }
    return result;
}

KeywordSet extract_keywords(const std::string& draft_summary, const TaggerModel& model) {
    return filter_keywords(model.tag(tokenize_for_tagging(draft_summary)));
}

}  // namespace intentsum
