#include "intentsum/prompts.hpp"

#include "intentsum/errors.hpp"

namespace intentsum {

TaskVariant task_variant_from_string(const std::string& name) {
    if (name == "generic") return TaskVariant::kGeneric;
    if (name == "abstract") return TaskVariant::kAbstract;
    if (name == "lay") return TaskVariant::kLay;
    throw InvalidArgument("unknown task variant: " + name);
}

const char* to_string(TaskVariant variant) {
    switch (variant) {
        case TaskVariant::kAbstract: return "abstract";
        case TaskVariant::kLay: return "lay";
        default: return "generic";
    }
}

ChatWrapper wrapper_preset(const std::string& name) {
    if (name == "identity") return ChatWrapper{"", ""};
    if (name == "llama-inst") return ChatWrapper{"[INST] ", " [/INST]"};
    throw InvalidArgument("unknown wrapper preset: " + name);
}

std::string build_instruction(const IntentSpec& spec) {
    if (spec.conciseness && *spec.conciseness < 1) {
        throw InvalidArgument("build_instruction: conciseness target must be >= 1");
    }
    std::string task;
    if (spec.conciseness) {
        task = "Write a summary of the article above in " +
               std::to_string(*spec.conciseness) + " sentences.";
    } else {
        switch (spec.task_variant) {
            case TaskVariant::kAbstract:
                task = "Write an abstract of the article above.";
                break;
            case TaskVariant::kLay:
                task = "Write a lay summary of the article above.";
                break;
            default:
                task = "Write a summary of the article above.";
                break;
        }
    }
    std::string out = task;
    if (!spec.keywords.empty()) {
        out += " Focus on the following keywords: ";
        for (size_t i = 0; i < spec.keywords.size(); ++i) {
            if (i) out += ", ";
            out += spec.keywords[i];
        }
        out += ".";
    }
    if (spec.narrative_first_person) {
        out += " Write in first person \"we\" when applicable.";
    }
    return out;
}

std::string assemble_prompt(const std::string& article, const std::string& instruction) {
    if (article.empty()) throw InvalidArgument("assemble_prompt: empty article");
    return "Article: " + article + "\n" + instruction;
}

std::string wrap_chat(const std::string& prompt, const ChatWrapper& wrapper) {
    return wrapper.prefix + prompt + wrapper.suffix;
}

}  // namespace intentsum
