#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intentsum/errors.hpp"
#include "intentsum/metrics.hpp"
#include "support/oracles.hpp"

using namespace intentsum;
using Tokens = std::vector<std::string>;

namespace {

Tokens random_tokens(std::mt19937& rng, size_t max_len, size_t alphabet = 3) {
    static const Tokens symbols = {"a", "b", "c", "d", "e"};
    Tokens out;
    const size_t len = rng() % (max_len + 1);
    for (size_t i = 0; i < len; ++i) out.push_back(symbols[rng() % alphabet]);
    return out;
}

RougeScore oracle_rouge_n(const Tokens& cand, const Tokens& ref, int n) {
    const long long overlap = oracles::clipped_overlap(cand, ref, n);
    const long long cand_total = oracles::ngram_total(cand, n);
    const long long ref_total = oracles::ngram_total(ref, n);
    RougeScore s;
    s.precision = cand_total ? static_cast<double>(overlap) / cand_total : 0.0;
    s.recall = ref_total ? static_cast<double>(overlap) / ref_total : 0.0;
    s.f1 = (s.precision + s.recall) > 0 ? 2 * s.precision * s.recall / (s.precision + s.recall)
                                        : 0.0;
    return s;
}

}  // namespace

TEST_CASE("rouge_n identity and disjoint cases") {
    const Tokens same = {"x", "y", "z"};
    for (int n = 1; n <= 3; ++n) {
        const RougeScore s = rouge_n(same, same, n);
        CHECK(s.precision == doctest::Approx(1.0));
        CHECK(s.recall == doctest::Approx(1.0));
        CHECK(s.f1 == doctest::Approx(1.0));
    }
    const RougeScore disjoint = rouge_n({"a", "b"}, {"c", "d"}, 1);
    CHECK(disjoint.precision == 0.0);
    CHECK(disjoint.recall == 0.0);
    CHECK(disjoint.f1 == 0.0);
}

TEST_CASE("rouge_n clipped-count fixture") {
    const Tokens ref = {"thompson", "sampling", "variational", "inference"};
    const Tokens cand = {"variational", "thompson", "methods"};
    const RougeScore s = rouge_n(cand, ref, 1);
    const RougeScore expect = oracle_rouge_n(cand, ref, 1);
    CHECK(s.recall == doctest::Approx(expect.recall));
    CHECK(s.recall == doctest::Approx(0.5));
    CHECK(s.precision == doctest::Approx(2.0 / 3.0));
    CHECK(s.f1 == doctest::Approx(4.0 / 7.0));
}

TEST_CASE("rouge_n edge cases") {
    CHECK(rouge_n({}, {"a"}, 1).f1 == 0.0);
    CHECK(rouge_n({"a"}, {}, 1).f1 == 0.0);
    CHECK(rouge_n({"a"}, {"a"}, 2).f1 == 0.0);  // windows longer than input
    CHECK_THROWS_AS(rouge_n({"a"}, {"a"}, 0), InvalidArgument);
}

TEST_CASE("rouge_l fixture and edges") {
    const RougeScore s = rouge_l({"a", "c", "d"}, {"a", "b", "c", "d"});
    CHECK(s.recall == doctest::Approx(0.75));
    CHECK(s.precision == doctest::Approx(1.0));
    CHECK(s.f1 == doctest::Approx(6.0 / 7.0));

    const Tokens same = {"p", "q", "r"};
    CHECK(rouge_l(same, same).f1 == doctest::Approx(1.0));
    CHECK(rouge_l({"a"}, {"b"}).f1 == 0.0);
    CHECK(rouge_l({}, {}).f1 == 0.0);
}

TEST_CASE("rouge swap symmetry exchanges precision and recall") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const Tokens a = random_tokens(rng, 8);
        const Tokens b = random_tokens(rng, 8);
        for (int n = 1; n <= 2; ++n) {
            const RougeScore ab = rouge_n(a, b, n);
            const RougeScore ba = rouge_n(b, a, n);
            CHECK(ab.precision == doctest::Approx(ba.recall));
            CHECK(ab.recall == doctest::Approx(ba.precision));
            CHECK(ab.f1 == doctest::Approx(ba.f1));
        }
        const RougeScore lab = rouge_l(a, b);
        const RougeScore lba = rouge_l(b, a);
        CHECK(lab.precision == doctest::Approx(lba.recall));
        CHECK(lab.f1 == doctest::Approx(lba.f1));
    }
}

TEST_CASE("recall is 1 when the reference multiset is contained in the candidate") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        Tokens ref = random_tokens(rng, 5);
        if (ref.empty()) ref.push_back("a");
        Tokens cand = ref;
        const Tokens extra = random_tokens(rng, 4);
        cand.insert(cand.end(), extra.begin(), extra.end());
        // Containment must hold for unigram multisets regardless of order.
        CHECK(rouge_n(cand, ref, 1).recall == doctest::Approx(1.0));
    }
}

TEST_CASE("rouge_l equals the all-subsequences oracle on short lists") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 1500; ++trial) {
        const Tokens a = random_tokens(rng, 8);
        const Tokens b = random_tokens(rng, 8);
        CHECK(lcs_length(a, b) == oracles::lcs_all_subsequences(a, b));
    }
}

TEST_CASE("novel ngram ratio") {
    CHECK(novel_ngram_ratio({"a", "b"}, {"a", "b", "c"}, 2) == doctest::Approx(0.0));
    CHECK(novel_ngram_ratio({"x", "y"}, {"a", "b", "c"}, 2) == doctest::Approx(100.0));
    CHECK(novel_ngram_ratio({"a", "b", "d"}, {"a", "b", "c"}, 2) == doctest::Approx(50.0));
    CHECK_THROWS_AS(novel_ngram_ratio({"a"}, {"a", "b"}, 2), UndefinedMetric);
    CHECK_THROWS_AS(novel_ngram_ratio({}, {"a"}, 1), UndefinedMetric);
    CHECK_THROWS_AS(novel_ngram_ratio({"a"}, {"a"}, 0), InvalidArgument);
}

TEST_CASE("novel ngram ratio matches the set-based oracle under source permutation") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        Tokens summary = random_tokens(rng, 8);
        if (summary.size() < 2) summary = {"a", "b"};
        Tokens source = random_tokens(rng, 12);
        if (source.size() < 2) source = {"b", "c"};
        const double expect = oracles::novel_ngram_pct(summary, source, 2);
        CHECK(novel_ngram_ratio(summary, source, 2) == doctest::Approx(expect));
        // Permuting the source only matters through its n-gram set.
        Tokens shuffled = source;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(novel_ngram_ratio(summary, shuffled, 2) ==
              doctest::Approx(oracles::novel_ngram_pct(summary, shuffled, 2)));
    }
}

TEST_CASE("fkgl fixtures") {
    // 6 words, 1 sentence, 6 syllables.
    CHECK(fkgl("The cat sat on the mat.") == doctest::Approx(-1.45).epsilon(1e-9));
    // 4 words, 1 sentence, 10 syllables.
    CHECK(fkgl("We propose variational inference.") == doctest::Approx(15.47).epsilon(1e-9));
    CHECK_THROWS_AS(fkgl(""), UndefinedMetric);
    CHECK_THROWS_AS(fkgl("?!"), UndefinedMetric);
}

TEST_CASE("fkgl increases with syllables per word at fixed sentence length") {
    const double one = fkgl("ba be bi.");
    const double two = fkgl("bano beno bino.");
    const double three = fkgl("banano benemo binito.");
    CHECK(one < two);
    CHECK(two < three);
}
