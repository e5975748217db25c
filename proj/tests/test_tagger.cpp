#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "intentsum/errors.hpp"
#include "intentsum/keywords.hpp"
#include "intentsum/tagger.hpp"

using namespace intentsum;

namespace {

const std::string kCorpusPath = std::string(PROJECT_DATA_DIR) + "/tagger/corpus.txt";
const std::string kModelPath = std::string(PROJECT_DATA_DIR) + "/tagger/model.txt";
const std::string kGoldPath = std::string(TEST_DATA_DIR) + "/gold_tagged.txt";

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Model whose lexicon maps every fixture word to its gold tag; tagging it
// reproduces the gold annotation by construction.
TaggerModel lexicon_model(const std::vector<std::vector<TaggedToken>>& corpus,
                          const std::string& path) {
    std::set<std::string> tags;
    std::map<std::string, std::string> lexicon;
    for (const auto& sentence : corpus) {
        for (const auto& tt : sentence) {
            tags.insert(tt.tag);
            auto it = lexicon.find(tt.token);
            REQUIRE((it == lexicon.end() || it->second == tt.tag));
            lexicon[tt.token] = tt.tag;
        }
    }
    std::ofstream out(path, std::ios::binary);
    out << "intentsum-tagger v1\n";
    out << "tags " << tags.size() << "\n";
    for (const auto& tag : tags) out << tag << "\n";
    out << "lexicon " << lexicon.size() << "\n";
    for (const auto& [word, tag] : lexicon) out << word << "\t" << tag << "\n";
    out << "weights 0\n";
    out.close();
    return TaggerModel::load(path);
}

}  // namespace

TEST_CASE("corpus format parsing") {
    const auto corpus = parse_tagged_corpus("We_PRP agree_VBP ._.\n\nIt_PRP holds_VBZ ._.\n");
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0][0].token == "We");
    CHECK(corpus[0][0].tag == "PRP");
    CHECK(corpus[1][1].tag == "VBZ");
    CHECK_THROWS_AS(parse_tagged_corpus("broken-token\n"), ParseError);
    CHECK_THROWS_AS(parse_tagged_corpus("trailing__\n"), ParseError);
    CHECK_THROWS_AS(load_tagged_corpus("missing-file.txt"), IoError);
}

TEST_CASE("training memorizes a single separable sentence") {
    const auto corpus = parse_tagged_corpus("We_PRP evaluate_VBP novel_JJ methods_NNS ._.\n");
    const TaggerModel model = train_tagger(corpus, 5);
    const auto tagged = model.tag({"We", "evaluate", "novel", "methods", "."});
    REQUIRE(tagged.size() == 5);
    CHECK(tagged[0].tag == "PRP");
    CHECK(tagged[1].tag == "VBP");
    CHECK(tagged[2].tag == "JJ");
    CHECK(tagged[3].tag == "NNS");
    CHECK(tagged[4].tag == ".");
}

TEST_CASE("training argument validation") {
    CHECK_THROWS_AS(train_tagger({}, 5), InvalidArgument);
    const auto corpus = parse_tagged_corpus("a_DT b_NN\n");
    CHECK_THROWS_AS(train_tagger(corpus, 0), InvalidArgument);
}

TEST_CASE("tag output length equals input length, empty in empty out") {
    const auto corpus = load_tagged_corpus(kCorpusPath);
    const TaggerModel model = train_tagger(corpus, 2, 9);
    CHECK(model.tag({}).empty());
    const std::vector<std::string> tokens = {"The", "model", "holds", ",", "mostly", "."};
    CHECK(model.tag(tokens).size() == tokens.size());
    CHECK_THROWS_AS(TaggerModel().tag({"x"}), InvalidArgument);
}

TEST_CASE("lexicon words bypass the perceptron") {
    const auto corpus = load_tagged_corpus(kCorpusPath);
    const TaggerModel model = train_tagger(corpus, 3, 9);
    REQUIRE(!model.lexicon().empty());
    const auto& [word, tag] = *model.lexicon().begin();
    // Lexicon hit wins regardless of context.
    const auto alone = model.tag({word});
    const auto wedged = model.tag({"+", word, "+"});
    CHECK(alone[0].tag == tag);
    CHECK(wedged[1].tag == tag);
}

TEST_CASE("training is deterministic for a fixed seed") {
    const auto corpus = load_tagged_corpus(kCorpusPath);
    const TaggerModel a = train_tagger(corpus, 2, 42);
    const TaggerModel b = train_tagger(corpus, 2, 42);
    a.save("tagger_a.txt");
    b.save("tagger_b.txt");
    const std::string file_a = read_all("tagger_a.txt");
    const std::string file_b = read_all("tagger_b.txt");
    std::remove("tagger_a.txt");
    std::remove("tagger_b.txt");
    CHECK(file_a == file_b);
}

TEST_CASE("model save/load round-trip is byte-exact") {
    const auto corpus = load_tagged_corpus(kCorpusPath);
    const TaggerModel model = train_tagger(corpus, 2, 7);
    model.save("tagger_rt1.txt");
    const TaggerModel reloaded = TaggerModel::load("tagger_rt1.txt");
    reloaded.save("tagger_rt2.txt");
    const std::string first = read_all("tagger_rt1.txt");
    const std::string second = read_all("tagger_rt2.txt");
    std::remove("tagger_rt1.txt");
    std::remove("tagger_rt2.txt");
    CHECK(first == second);
    CHECK(reloaded.tag_set() == model.tag_set());

    CHECK_THROWS_AS(TaggerModel::load("no-such-model.txt"), IoError);
    CHECK_THROWS_AS(TaggerModel().save("nope.txt"), InvalidArgument);
}

TEST_CASE("bundled corpus split reaches the pinned held-out accuracy") {
    const auto corpus = load_tagged_corpus(kCorpusPath);
    REQUIRE(corpus.size() >= 100);
    std::vector<std::vector<TaggedToken>> train, held;
    for (size_t i = 0; i < corpus.size(); ++i) {
        (i % 5 == 4 ? held : train).push_back(corpus[i]);
    }
    const TaggerModel model = train_tagger(train, 5, 1);
    size_t correct = 0, total = 0;
    for (const auto& sentence : held) {
        std::vector<std::string> tokens;
        for (const auto& tt : sentence) tokens.push_back(tt.token);
        const auto tagged = model.tag(tokens);
        for (size_t i = 0; i < sentence.size(); ++i) {
            ++total;
            if (tagged[i].tag == sentence[i].tag) ++correct;
        }
    }
    const double accuracy = static_cast<double>(correct) / static_cast<double>(total);
    MESSAGE("held-out accuracy: ", accuracy, " (", correct, "/", total, ")");
    CHECK(accuracy >= 0.90);
}

TEST_CASE("bundled model file tags an unseen -ing word as VBG") {
    const TaggerModel model = TaggerModel::load(kModelPath);
    // "rebalancing" does not occur anywhere in the bundled corpus.
    const auto tagged = model.tag({"The", "model", "rebalancing", "weights", "converges", "."});
    CHECK(tagged[2].tag == "VBG");
}

TEST_CASE("tokenize_for_tagging preserves case and splits punctuation") {
    CHECK(tokenize_for_tagging("We use state-of-the-art CFG, rapidly.") ==
          std::vector<std::string>{"We", "use", "state-of-the-art", "CFG", ",", "rapidly",
                                   "."});
    CHECK(tokenize_for_tagging("γ = 2") == std::vector<std::string>{"γ", "=", "2"});
    CHECK(tokenize_for_tagging("it's fine-") ==
          std::vector<std::string>{"it's", "fine", "-"});
    CHECK(tokenize_for_tagging("").empty());
}

TEST_CASE("keyword tag filter") {
    const auto& tags = keyword_pos_tags();
    CHECK(tags.size() == 15);
    CHECK(tags.count("NN"));
    CHECK(tags.count("FW"));
    CHECK(tags.count("SYM"));
    CHECK(!tags.count("PRP"));
    CHECK(!tags.count("DT"));
    CHECK(!tags.count("RB"));
}

TEST_CASE("filter_keywords applies the tag filter with first-occurrence dedupe") {
    const std::vector<TaggedToken> tagged = {
        {"We", "PRP"},       {"propose", "VBP"},  {"variational", "JJ"},
        {"Thompson", "NNP"}, {"sampling", "NN"},  {".", "."},
    };
    CHECK(filter_keywords(tagged).keywords ==
          std::vector<std::string>{"propose", "variational", "thompson", "sampling"});

    const std::vector<TaggedToken> pronouns = {
        {"we", "PRP"}, {"our", "PRP$"}, {"the", "DT"}, {"of", "IN"},
    };
    CHECK(filter_keywords(pronouns).keywords.empty());

    const std::vector<TaggedToken> dupes = {
        {"sampling", "NN"}, {"improves", "VBZ"}, {"Sampling", "NN"},
    };
    CHECK(filter_keywords(dupes).keywords ==
          std::vector<std::string>{"sampling", "improves"});
}

TEST_CASE("gold fixture: extract_keywords equals the set-filter oracle") {
    const auto gold = load_tagged_corpus(kGoldPath);
    size_t token_count = 0;
    for (const auto& sentence : gold) token_count += sentence.size();
    REQUIRE(token_count >= 200);

    const TaggerModel model = lexicon_model(gold, "gold_lexicon_model.txt");
    std::remove("gold_lexicon_model.txt");

    // Independent oracle: scan the gold tags with a fresh copy of the
    // keyword tag list and first-occurrence dedupe.
    const std::set<std::string> keep = {"FW", "JJ", "JJR", "JJS",  "NN",  "NNS", "NNP", "NNPS",
                                        "SYM", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ"};
    std::vector<std::string> expected;
    for (const auto& sentence : gold) {
        for (const auto& tt : sentence) {
            if (!keep.count(tt.tag)) continue;
            std::string low;
            for (char c : tt.token) {
                low.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
            }
            if (std::find(expected.begin(), expected.end(), low) == expected.end()) {
                expected.push_back(low);
            }
        }
    }

    std::string text;
    for (const auto& sentence : gold) {
        for (const auto& tt : sentence) {
            if (!text.empty()) text.push_back(' ');
            text += tt.token;
        }
    }
    const KeywordSet extracted = extract_keywords(text, model);
    CHECK(extracted.keywords == expected);
}

TEST_CASE("extract_keywords edge cases") {
    const auto gold = load_tagged_corpus(kGoldPath);
    const TaggerModel model = lexicon_model(gold, "gold_lexicon_model2.txt");
    std::remove("gold_lexicon_model2.txt");
    CHECK(extract_keywords("", model).keywords.empty());
    CHECK(extract_keywords(", , .", model).keywords.empty());
    CHECK(extract_keywords("sampling improves sampling", model).keywords ==
          std::vector<std::string>{"sampling", "improves"});
}
