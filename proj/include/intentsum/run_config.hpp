#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "intentsum/decoder.hpp"
#include "intentsum/http_provider.hpp"
#include "intentsum/prompts.hpp"
#include "intentsum/provider.hpp"

namespace intentsum {

struct PromptDefaults {
    std::optional<int> conciseness;
    bool narrative_first_person = false;
    bool use_keywords = false;
    TaskVariant task_variant = TaskVariant::kGeneric;
};

struct ToyProviderConfig {
    std::string corpus_path;
    double keyword_bonus = 0.0;
    std::vector<std::string> keywords;
    std::string trigger = "Focus on the following keywords";
};

struct ProviderConfig {
    std::string type = "toy";       // "toy" or "http"
    ToyProviderConfig toy;
    HttpProviderConfig http;
    std::string http_vocab_path;    // word-level codec for http providers
};

struct RunConfig {
    std::string dataset_path;
    std::string output_dir = "out";
    std::optional<std::string> preset;  // arxiv | pubmed | elife
    PromptDefaults prompt;
    GuidanceConfig guidance;
    ProviderConfig provider;
    std::string wrapper = "identity";
    int max_context_tokens = 2048;
    std::set<std::string> metrics;  // empty = all
    int workers = 1;
    std::string tagger_model_path;
    std::string abbreviations_path;

    bool metric_enabled(const std::string& name) const {
        return metrics.empty() || metrics.count(name) > 0;
    }

    static RunConfig from_json(const nlohmann::json& j);
    static RunConfig from_file(const std::string& path);
    nlohmann::json to_json() const;
};

struct ProviderBundle {
    std::shared_ptr<Provider> provider;
    std::shared_ptr<const Codec> codec;
};

// Instantiates the configured provider. The environment variable
// INTENTSUM_PROVIDER_ENDPOINT overrides the http endpoint (and only it).
ProviderBundle make_provider(const ProviderConfig& config);

}  // namespace intentsum
