#pragma once

#include <optional>
#include <string>
#include <vector>

namespace intentsum {

enum class TaskVariant { kGeneric, kAbstract, kLay };

TaskVariant task_variant_from_string(const std::string& name);
const char* to_string(TaskVariant variant);

// Target intentions for one summary. With no field set the instruction
// degenerates to the plain summarization prompt.
struct IntentSpec {
    std::optional<int> conciseness;          // target sentence count, >= 1
    bool narrative_first_person = false;
    std::vector<std::string> keywords;       // empty = no keyword intent
    TaskVariant task_variant = TaskVariant::kGeneric;
};

struct ChatWrapper {
    std::string prefix;
    std::string suffix;
};

// Named presets: "identity" and "llama-inst" ("[INST] ... [/INST]").
ChatWrapper wrapper_preset(const std::string& name);

// Instruction sentences in fixed order: conciseness (or the task phrase),
// keywords, narrative; single spaces in between.
std::string build_instruction(const IntentSpec& spec);

// "Article: " + article + "\n" + instruction.
std::string assemble_prompt(const std::string& article, const std::string& instruction);

std::string wrap_chat(const std::string& prompt, const ChatWrapper& wrapper);

}  // namespace intentsum
