#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "intentsum/errors.hpp"
#include "intentsum/prompts.hpp"
#include "intentsum/segmentation.hpp"

using namespace intentsum;

TEST_CASE("baseline instruction") {
    CHECK(build_instruction(IntentSpec{}) == "Write a summary of the article above.");
}

TEST_CASE("conciseness instruction") {
    IntentSpec spec;
    spec.conciseness = 6;
    CHECK(build_instruction(spec) == "Write a summary of the article above in 6 sentences.");
    spec.conciseness = 14;
    const std::string rendered = build_instruction(spec);
    CHECK(rendered.find("14") != std::string::npos);
    CHECK(rendered.find("keyword") == std::string::npos);
    CHECK(rendered.find("first person") == std::string::npos);
    spec.conciseness = 0;
    CHECK_THROWS_AS(build_instruction(spec), InvalidArgument);
}

TEST_CASE("task variant phrases replace the conciseness sentence") {
    IntentSpec spec;
    spec.task_variant = TaskVariant::kAbstract;
    CHECK(build_instruction(spec) == "Write an abstract of the article above.");
    spec.task_variant = TaskVariant::kLay;
    CHECK(build_instruction(spec) == "Write a lay summary of the article above.");
    // An explicit sentence target wins over the variant phrase.
    spec.conciseness = 8;
    CHECK(build_instruction(spec) == "Write a summary of the article above in 8 sentences.");
}

TEST_CASE("full composition order: conciseness, keywords, narrative") {
    IntentSpec spec;
    spec.conciseness = 8;
    spec.keywords = {"a", "b"};
    spec.narrative_first_person = true;
    CHECK(build_instruction(spec) ==
          "Write a summary of the article above in 8 sentences. "
          "Focus on the following keywords: a, b. "
          "Write in first person \"we\" when applicable.");
}

TEST_CASE("keyword list renders comma-separated and round-trips") {
    IntentSpec spec;
    spec.keywords = {"thompson", "sampling", "variational"};
    const std::string rendered = build_instruction(spec);
    const std::string marker = "Focus on the following keywords: ";
    const size_t start = rendered.find(marker);
    REQUIRE(start != std::string::npos);
    const size_t list_start = start + marker.size();
    const size_t end = rendered.find('.', list_start);
    REQUIRE(end != std::string::npos);
    // Parse the rendered list back.
    std::vector<std::string> parsed;
    std::string current;
    for (char c : rendered.substr(list_start, end - list_start)) {
        if (c == ',') {
            parsed.push_back(current);
            current.clear();
        } else if (c == ' ' && current.empty()) {
        } else {
            current.push_back(c);
        }
    }
    parsed.push_back(current);
    CHECK(parsed == spec.keywords);
}

TEST_CASE("assemble_prompt") {
    CHECK(assemble_prompt("X", "Do Y.") == "Article: X\nDo Y.");
    CHECK_THROWS_AS(assemble_prompt("", "Do Y."), InvalidArgument);
    const std::string instruction = "Tabs\tand  spaces stay   intact.";
    const std::string prompt = assemble_prompt("Body", instruction);
    CHECK(prompt.substr(prompt.size() - instruction.size()) == instruction);
}

TEST_CASE("wrap_chat") {
    CHECK(wrap_chat("Z", wrapper_preset("llama-inst")) == "[INST] Z [/INST]");
    CHECK(wrap_chat("unchanged", wrapper_preset("identity")) == "unchanged");
    CHECK(wrap_chat("", ChatWrapper{"<pre>", "<post>"}) == "<pre><post>");
    CHECK_THROWS_AS(wrapper_preset("nope"), InvalidArgument);
}

TEST_CASE("prompt assembly is deterministic") {
    IntentSpec spec;
    spec.conciseness = 6;
    spec.keywords = {"k1", "k2"};
    spec.narrative_first_person = true;
    const std::string a =
        wrap_chat(assemble_prompt("Some article.", build_instruction(spec)),
                  wrapper_preset("llama-inst"));
    const std::string b =
        wrap_chat(assemble_prompt("Some article.", build_instruction(spec)),
                  wrapper_preset("llama-inst"));
    CHECK(a == b);
}
