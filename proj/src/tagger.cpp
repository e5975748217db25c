#include "intentsum/tagger.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "intentsum/errors.hpp"
#include "intentsum/unicode.hpp"

namespace intentsum {

namespace {

constexpr const char* kMagic = "intentsum-tagger v1";
constexpr const char* kStartWord1 = "-START-";
constexpr const char* kStartWord2 = "-START2-";
constexpr const char* kEndWord1 = "-END-";
constexpr const char* kEndWord2 = "-END2-";
constexpr const char* kStartTag1 = "-S-";
constexpr const char* kStartTag2 = "-S2-";

bool has_digit(const std::vector<char32_t>& cps) {
    for (char32_t cp : cps) {
        if (cp >= U'0' && cp <= U'9') return true;
    }
    return false;
}

bool all_digits(const std::vector<char32_t>& cps) {
    for (char32_t cp : cps) {
        if (cp < U'0' || cp > U'9') return false;
    }
    return !cps.empty();
}

bool has_hyphen(const std::vector<char32_t>& cps) {
    return std::find(cps.begin(), cps.end(), U'-') != cps.end();
}

// Rare surface forms are mapped to coarse classes so weights generalize.
std::string normalize_word(const std::string& word) {
    const std::vector<char32_t> cps = decode_utf8(word);
    if (has_hyphen(cps)) return "!HYPHEN";
    if (all_digits(cps) && cps.size() == 4) return "!YEAR";
    if (!cps.empty() && cps[0] >= U'0' && cps[0] <= U'9') return "!DIGITS";
    return lowercase(word);
}

std::string suffix(const std::string& word, size_t len) {
    const std::vector<char32_t> cps = decode_utf8(lowercase(word));
    if (cps.size() <= len) return lowercase(word);
    std::vector<char32_t> tail(cps.end() - len, cps.end());
    return encode_utf8(tail);
}

std::string serialize_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("tagger model: bad number: " + text);
    }
    return value;
}

}  // namespace

std::vector<std::string> tagger_features(const std::vector<std::string>& tokens, size_t i,
                                         const std::string& prev_tag,
                                         const std::string& prev2_tag) {
    const std::string& word = tokens[i];
    auto word_at = [&](long long j) -> std::string {
        if (j < 0) return j == -1 ? kStartWord1 : kStartWord2;
        if (j >= static_cast<long long>(tokens.size())) {
            return j == static_cast<long long>(tokens.size()) ? kEndWord1 : kEndWord2;
        }
        return normalize_word(tokens[j]);
    };
    const std::vector<char32_t> cps = decode_utf8(word);
    const std::string norm = normalize_word(word);
    const long long pos = static_cast<long long>(i);

    std::vector<std::string> features;
    features.reserve(18);
    features.push_back("bias");
    features.push_back("w=" + norm);
    features.push_back("suf1=" + suffix(word, 1));
    features.push_back("suf2=" + suffix(word, 2));
    features.push_back("suf3=" + suffix(word, 3));
    features.push_back("t-1=" + prev_tag);
    features.push_back("t-2=" + prev2_tag);
    features.push_back("t-1|t-2=" + prev_tag + "|" + prev2_tag);
    features.push_back("t-1|w=" + prev_tag + "|" + norm);
    features.push_back("w-1=" + word_at(pos - 1));
    features.push_back("w-1suf3=" + (i > 0 ? suffix(tokens[i - 1], 3) : std::string(kStartWord1)));
    features.push_back("w-2=" + word_at(pos - 2));
    features.push_back("w+1=" + word_at(pos + 1));
    features.push_back("w+1suf3=" + (i + 1 < tokens.size() ? suffix(tokens[i + 1], 3)
                                                           : std::string(kEndWord1)));
    features.push_back("w+2=" + word_at(pos + 2));
    if (!cps.empty() && is_upper(cps[0])) features.push_back("f_cap");
    if (has_digit(cps)) features.push_back("f_digit");
    if (has_hyphen(cps)) features.push_back("f_hyphen");
    return features;
}

std::string TaggerModel::predict(const std::vector<std::string>& features) const {
    std::map<std::string, double> scores;
    for (const std::string& feature : features) {
        auto it = weights_.find(feature);
        if (it == weights_.end()) continue;
        for (const auto& [tag, weight] : it->second) scores[tag] += weight;
    }
    // Highest score wins; lexicographically smallest tag on ties (also
    // when no feature fired at all).
    std::string best = tags_.front();
    double best_score = scores.count(best) ? scores[best] : 0.0;
    for (const std::string& tag : tags_) {
        const double score = scores.count(tag) ? scores[tag] : 0.0;
        if (score > best_score) {
            best = tag;
            best_score = score;
        }
    }
    return best;
}

std::vector<TaggedToken> TaggerModel::tag(const std::vector<std::string>& tokens) const {
    if (!trained()) throw InvalidArgument("tagger: model is not trained");
    std::vector<TaggedToken> out;
    out.reserve(tokens.size());
    std::string prev = kStartTag1, prev2 = kStartTag2;
    for (size_t i = 0; i < tokens.size(); ++i) {
        std::string guess;
        auto it = lexicon_.find(tokens[i]);
        if (it != lexicon_.end()) {
            guess = it->second;
        } else {
            guess = predict(tagger_features(tokens, i, prev, prev2));
        }
        out.push_back({tokens[i], guess});
        prev2 = prev;
        prev = guess;
    }
    return out;
}

TaggerModel train_tagger(const std::vector<std::vector<TaggedToken>>& corpus, int epochs,
                         uint64_t seed) {
    if (corpus.empty()) throw InvalidArgument("train_tagger: empty corpus");
    if (epochs < 1) throw InvalidArgument("train_tagger: epochs must be >= 1");

    TaggerModel model;
    {
        std::map<std::string, bool> tag_seen;
        for (const auto& sentence : corpus) {
            for (const auto& tt : sentence) {
                if (tt.tag.empty()) throw InvalidArgument("train_tagger: empty tag");
                tag_seen[tt.tag] = true;
            }
        }
        for (const auto& [tag, seen] : tag_seen) model.tags_.push_back(tag);
    }

    // Lexicon: words whose dominant tag covers >= 97% of >= 20 occurrences.
    {
        std::map<std::string, std::map<std::string, int>> counts;
        for (const auto& sentence : corpus) {
            for (const auto& tt : sentence) ++counts[tt.token][tt.tag];
        }
        for (const auto& [word, tag_counts] : counts) {
            int total = 0, best_count = 0;
            std::string best_tag;
            for (const auto& [tag, count] : tag_counts) {
                total += count;
                if (count > best_count) {
                    best_count = count;
                    best_tag = tag;
                }
            }
            if (total >= 20 && best_count >= 0.97 * total) {
                model.lexicon_[word] = best_tag;
            }
        }
    }

    struct Entry {
        double weight = 0.0;
        double total = 0.0;
        long long stamp = 0;
    };
    std::unordered_map<std::string, std::map<std::string, Entry>> state;
    long long updates = 0;

    auto apply = [&](const std::string& feature, const std::string& tag, double delta) {
        Entry& e = state[feature][tag];
        e.total += e.weight * static_cast<double>(updates - e.stamp);
        e.weight += delta;
        e.stamp = updates;
    };

    std::vector<size_t> order(corpus.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed);

    for (int epoch = 0; epoch < epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (size_t idx : order) {
            const auto& sentence = corpus[idx];
            std::vector<std::string> tokens;
            tokens.reserve(sentence.size());
            for (const auto& tt : sentence) tokens.push_back(tt.token);

            std::string prev = kStartTag1, prev2 = kStartTag2;
            for (size_t i = 0; i < sentence.size(); ++i) {
                std::string guess;
                auto lex = model.lexicon_.find(tokens[i]);
                if (lex != model.lexicon_.end()) {
                    guess = lex->second;
                } else {
                    const auto features = tagger_features(tokens, i, prev, prev2);
                    ++updates;
                    // Score with the raw (non-averaged) weights while training.
                    std::map<std::string, double> scores;
                    for (const auto& feature : features) {
                        auto it = state.find(feature);
                        if (it == state.end()) continue;
                        for (const auto& [tag, entry] : it->second) {
                            scores[tag] += entry.weight;
                        }
                    }
                    guess = model.tags_.front();
                    double best = scores.count(guess) ? scores[guess] : 0.0;
                    for (const auto& tag : model.tags_) {
                        const double s = scores.count(tag) ? scores[tag] : 0.0;
                        if (s > best) {
                            best = s;
                            guess = tag;
                        }
                    }
                    if (guess != sentence[i].tag) {
                        for (const auto& feature : features) {
                            apply(feature, sentence[i].tag, 1.0);
                            apply(feature, guess, -1.0);
                        }
                    }
                }
                prev2 = prev;
                prev = guess;
            }
        }
    }

    // Averaged weights; zero entries are dropped.
    for (auto& [feature, tag_entries] : state) {
        for (auto& [tag, entry] : tag_entries) {
            entry.total += entry.weight * static_cast<double>(updates - entry.stamp);
            if (entry.total != 0.0) {
                model.weights_[feature][tag] = entry.total / static_cast<double>(updates);
            }
        }
    }
    return model;
}

void TaggerModel::save(const std::string& path) const {
    if (!trained()) throw InvalidArgument("tagger: cannot save an untrained model");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write tagger model: " + path);
    out << kMagic << "\n";
    out << "tags " << tags_.size() << "\n";
    for (const auto& tag : tags_) out << tag << "\n";
    out << "lexicon " << lexicon_.size() << "\n";
    for (const auto& [word, tag] : lexicon_) out << word << "\t" << tag << "\n";
    size_t weight_count = 0;
    for (const auto& [feature, tag_weights] : weights_) weight_count += tag_weights.size();
    out << "weights " << weight_count << "\n";
    for (const auto& [feature, tag_weights] : weights_) {
        for (const auto& [tag, weight] : tag_weights) {
            out << feature << "\t" << tag << "\t" << serialize_double(weight) << "\n";
        }
    }
    if (!out) throw IoError("failed writing tagger model: " + path);
}

TaggerModel TaggerModel::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open tagger model: " + path);
    std::string line;
    auto next_line = [&](const char* what) {
        if (!std::getline(in, line)) throw ParseError(std::string("tagger model: missing ") + what);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    };
    if (next_line("magic") != kMagic) {
        throw ParseError("tagger model: bad magic header in " + path);
    }

    auto section_count = [&](const std::string& header, const char* name) -> size_t {
        std::istringstream ss(header);
        std::string word;
        size_t count = 0;
        if (!(ss >> word >> count) || word != name) {
            throw ParseError(std::string("tagger model: expected '") + name + " N', got: " +
                             header);
        }
        return count;
    };

    TaggerModel model;
    const size_t n_tags = section_count(next_line("tags header"), "tags");
    for (size_t i = 0; i < n_tags; ++i) model.tags_.push_back(next_line("tag"));
    if (model.tags_.empty()) throw ParseError("tagger model: empty tag set");

    const size_t n_lex = section_count(next_line("lexicon header"), "lexicon");
    for (size_t i = 0; i < n_lex; ++i) {
        const std::string& entry = next_line("lexicon entry");
        const size_t sep = entry.find('\t');
        if (sep == std::string::npos) throw ParseError("tagger model: bad lexicon entry");
        model.lexicon_[entry.substr(0, sep)] = entry.substr(sep + 1);
    }

    const size_t n_weights = section_count(next_line("weights header"), "weights");
    for (size_t i = 0; i < n_weights; ++i) {
        const std::string& entry = next_line("weight entry");
        const size_t sep1 = entry.find('\t');
        const size_t sep2 = sep1 == std::string::npos ? std::string::npos
                                                      : entry.find('\t', sep1 + 1);
        if (sep2 == std::string::npos) throw ParseError("tagger model: bad weight entry");
        model.weights_[entry.substr(0, sep1)][entry.substr(sep1 + 1, sep2 - sep1 - 1)] =
            parse_double(entry.substr(sep2 + 1));
    }
    return model;
}

std::vector<std::string> tokenize_for_tagging(std::string_view text) {
    const std::vector<char32_t> cps = decode_utf8(text);
    std::vector<std::string> tokens;
    size_t i = 0;
    const size_t n = cps.size();
    while (i < n) {
        if (is_space(cps[i])) {
            ++i;
            continue;
        }
        if (is_alnum(cps[i])) {
            std::string token;
            append_utf8(token, cps[i]);
            ++i;
            while (i < n) {
                if (is_alnum(cps[i])) {
                    append_utf8(token, cps[i]);
                    ++i;
                } else if ((cps[i] == U'-' || cps[i] == U'\'') && i + 1 < n &&
                           is_alnum(cps[i + 1])) {
                    append_utf8(token, cps[i]);
                    append_utf8(token, cps[i + 1]);
                    i += 2;
                } else {
                    break;
                }
            }
            tokens.push_back(std::move(token));
        } else {
            std::string punct;
            append_utf8(punct, cps[i]);
            tokens.push_back(std::move(punct));
            ++i;
        }
    }
    return tokens;
}

std::vector<std::vector<TaggedToken>> parse_tagged_corpus(const std::string& content) {
    std::vector<std::vector<TaggedToken>> corpus;
    std::istringstream in(content);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<TaggedToken> sentence;
        std::istringstream words(line);
        std::string item;
        while (words >> item) {
            const size_t sep = item.rfind('_');
            if (sep == std::string::npos || sep == 0 || sep + 1 == item.size()) {
                throw ParseError("tagged corpus line " + std::to_string(line_no) +
                                 ": expected word_TAG, got '" + item + "'");
            }
            sentence.push_back({item.substr(0, sep), item.substr(sep + 1)});
        }
        corpus.push_back(std::move(sentence));
    }
    return corpus;
}

std::vector<std::vector<TaggedToken>> load_tagged_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open tagged corpus: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_tagged_corpus(buffer.str());
}

}  // namespace intentsum
