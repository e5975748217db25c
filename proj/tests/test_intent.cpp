#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intentsum/errors.hpp"
#include "intentsum/intent_metrics.hpp"
#include "support/oracles.hpp"

using namespace intentsum;

namespace {

Sentence sentence_of(const std::string& text) {
    const auto split = split_sentences(text);
    REQUIRE(split.size() == 1);
    return split[0];
}

std::vector<Sentence> summary_of(const std::string& text) { return split_sentences(text); }

}  // namespace

TEST_CASE("narrative classifier trigger rules") {
    CHECK(classify_narrative(sentence_of("We propose a method.")) == NarrativeLabel::kFirst);
    CHECK(classify_narrative(sentence_of("The authors propose a method.")) ==
          NarrativeLabel::kThird);
    CHECK(classify_narrative(sentence_of("In this paper, we propose X.")) ==
          NarrativeLabel::kFirst);
    CHECK(classify_narrative(sentence_of("Our results are strong.")) == NarrativeLabel::kFirst);
    CHECK(classify_narrative(sentence_of("Finally, our model wins.")) == NarrativeLabel::kFirst);
}

TEST_CASE("narrative classifier word boundaries") {
    // ", well" must not fire the ", we" rule.
    CHECK(classify_narrative(sentence_of("Results, well above baseline, are shown.")) ==
          NarrativeLabel::kThird);
    CHECK(classify_narrative(sentence_of("However, weather data is noisy.")) ==
          NarrativeLabel::kThird);
    CHECK(classify_narrative(sentence_of("The tool, ours excluded, fails.")) ==
          NarrativeLabel::kThird);
    CHECK(classify_narrative(sentence_of("Weather models improve.")) == NarrativeLabel::kThird);
    CHECK(classify_narrative(sentence_of("Ourselves aside, the model works.")) ==
          NarrativeLabel::kThird);
    // Pronoun followed by punctuation still matches.
    CHECK(classify_narrative(sentence_of("The approach, we believe, scales.")) ==
          NarrativeLabel::kFirst);
}

TEST_CASE("narrative classifier is case-insensitive") {
    const std::vector<std::string> texts = {
        "We propose a method.",          "In this paper, we propose X.",
        "The authors propose a method.", "Results, well above baseline, hold.",
        "Our model wins.",
    };
    for (const auto& text : texts) {
        std::string upper = text;
        for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        CHECK(classify_narrative(sentence_of(text)) == classify_narrative(sentence_of(upper)));
    }
    CHECK_THROWS_AS(classify_narrative(Sentence{}), InvalidArgument);
}

TEST_CASE("k_conciseness") {
    CHECK(k_conciseness(6, summary_of("A. B. C. D. E. F.")) == 0);
    CHECK(k_conciseness(6, summary_of("A. B. C. D. E. F. G. H.")) == 2);
    CHECK(k_conciseness(14, summary_of("A. B. C.")) == 11);
    CHECK_THROWS_AS(k_conciseness(0, {}), InvalidArgument);
}

TEST_CASE("k_conciseness triangle property") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int t1 = 1 + static_cast<int>(rng() % 20);
        const int t2 = 1 + static_cast<int>(rng() % 20);
        std::vector<Sentence> summary(rng() % 25, sentence_of("Stub."));
        const int k1 = k_conciseness(t1, summary);
        const int k2 = k_conciseness(t2, summary);
        CHECK(std::abs(k1 - k2) <= std::abs(t1 - t2));
        CHECK((k1 == 0) == (static_cast<int>(summary.size()) == t1));
    }
}

TEST_CASE("k_narrative") {
    const auto mixed = summary_of("We propose X. The data shows Y.");
    CHECK(k_narrative(NarrativeLabel::kFirst, mixed) == doctest::Approx(50.0));
    CHECK(k_narrative(NarrativeLabel::kThird, mixed) == doctest::Approx(50.0));

    const auto all_first = summary_of("We do X. Our results hold.");
    CHECK(k_narrative(NarrativeLabel::kFirst, all_first) == doctest::Approx(100.0));

    const auto third_mixed = summary_of("Our model wins. Results are shown.");
    CHECK(k_narrative(NarrativeLabel::kThird, third_mixed) == doctest::Approx(50.0));

    CHECK_THROWS_AS(k_narrative(NarrativeLabel::kFirst, {}), UndefinedMetric);
}

TEST_CASE("k_narrative labels are exhaustive and exclusive") {
    std::mt19937 rng(13);
    const std::vector<std::string> pool = {
        "We propose X.",
        "Our bound is tight.",
        "In this work, we evaluate Y.",
        "The baseline, well tuned, wins.",
        "Results are reported.",
        "However, our data is small.",
        "The authors disagree.",
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Sentence> summary;
        const size_t len = 1 + rng() % 6;
        for (size_t i = 0; i < len; ++i) summary.push_back(sentence_of(pool[rng() % pool.size()]));
        const double first = k_narrative(NarrativeLabel::kFirst, summary);
        const double third = k_narrative(NarrativeLabel::kThird, summary);
        CHECK(first + third == doctest::Approx(100.0));
    }
}

TEST_CASE("k_keywords clipped recall") {
    CHECK(k_keywords({"alpha", "beta"}, {"alpha", "beta", "gamma"}) == doctest::Approx(100.0));
    CHECK(k_keywords({"alpha", "beta"}, {"gamma", "delta"}) == doctest::Approx(0.0));
    CHECK(k_keywords({"thompson", "sampling", "variational"},
                     {"we", "use", "thompson", "sampling"}) == doctest::Approx(100.0 * 2 / 3));
    CHECK_THROWS_AS(k_keywords({}, {"a"}), InvalidArgument);
    CHECK_THROWS_AS(k_keywords({"?!"}, {"a"}), InvalidArgument);
}

TEST_CASE("multi-word keywords are flattened to unigrams") {
    CHECK(k_keywords({"state-of-the-art"}, {"state", "of", "the", "art"}) ==
          doctest::Approx(100.0));
    CHECK(k_keywords({"state-of-the-art"}, {"state", "art"}) == doctest::Approx(50.0));
}

TEST_CASE("k_keywords is monotone under appending summary tokens") {
    std::mt19937 rng(37);
    const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f"};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> keywords;
        const size_t klen = 1 + rng() % 4;
        for (size_t i = 0; i < klen; ++i) keywords.push_back(vocab[rng() % vocab.size()]);
        std::vector<std::string> summary;
        double last = k_keywords(keywords, summary);
        for (int step = 0; step < 10; ++step) {
            summary.push_back(vocab[rng() % vocab.size()]);
            const double next = k_keywords(keywords, summary);
            CHECK(next >= last - 1e-12);
            last = next;
        }
    }
}

TEST_CASE("aggregate_metric") {
    CHECK(aggregate_metric({0.0, 2.0}) == doctest::Approx(1.0));
    CHECK(aggregate_metric({42.5}) == doctest::Approx(42.5));
    CHECK(aggregate_metric({50.0, 100.0, 0.0}) == doctest::Approx(50.0));
    CHECK_THROWS_AS(aggregate_metric({}), UndefinedMetric);

    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> values;
        const size_t len = 1 + rng() % 12;
        for (size_t i = 0; i < len; ++i) values.push_back((rng() % 1000) / 10.0);
        CHECK(aggregate_metric(values) == doctest::Approx(oracles::mean(values)));
    }
}
