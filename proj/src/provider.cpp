#include "intentsum/provider.hpp"

#include <algorithm>

#include "intentsum/errors.hpp"
#include "intentsum/segmentation.hpp"

namespace intentsum {

VocabCodec::VocabCodec(std::vector<std::string> words) : words_(std::move(words)) {
    if (words_.size() < 2 || words_[kUnkId] != "<unk>" || words_[kEndId] != "</s>") {
        throw InvalidArgument("VocabCodec: vocabulary must start with <unk>, </s>");
    }
    index_.reserve(words_.size());
    for (size_t i = 0; i < words_.size(); ++i) {
        index_.emplace_back(words_[i], static_cast<int>(i));
    }
    std::sort(index_.begin(), index_.end());
}

int VocabCodec::id_of(const std::string& word) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), word,
                               [](const auto& entry, const std::string& w) {
                                   return entry.first < w;
                               });
    if (it != index_.end() && it->first == word) return it->second;
    return kUnkId;
}

const std::string& VocabCodec::word_of(int id) const {
    if (id < 0 || id >= size()) throw InvalidArgument("VocabCodec: id out of range");
    return words_[id];
}

std::vector<int> VocabCodec::encode(const std::string& text) const {
    std::vector<int> ids;
    for (const std::string& word : tokenize_words(text)) {
        ids.push_back(id_of(word));
    }
    return ids;
}

std::string VocabCodec::decode(const std::vector<int>& ids) const {
    std::string out;
    for (int id : ids) {
        if (!out.empty()) out.push_back(' ');
        out += word_of(id);
    }
    return out;
}

}  // namespace intentsum
