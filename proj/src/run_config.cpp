#include "intentsum/run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "intentsum/errors.hpp"
#include "intentsum/toy_lm.hpp"

namespace intentsum {

namespace {

void apply_preset(RunConfig& config, const std::string& preset) {
    if (preset == "arxiv") {
        config.prompt.conciseness = 6;
        config.prompt.narrative_first_person = true;
        config.guidance.max_new_tokens = 256;
    } else if (preset == "pubmed") {
        config.prompt.conciseness = 8;
        config.prompt.narrative_first_person = true;
        config.guidance.max_new_tokens = 512;
    } else if (preset == "elife") {
        config.prompt.conciseness = 14;
        config.prompt.narrative_first_person = false;
        config.guidance.max_new_tokens = 512;
    } else {
        throw InvalidArgument("unknown dataset preset: " + preset);
    }
}

const std::set<std::string> kKnownMetrics = {
    "rouge1", "rouge2", "rougeL", "k_conciseness", "k_narrative",
    "k_keywords", "fkgl", "novel_bigram", "words",
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("run config: expected a JSON object");
    RunConfig config;
    if (j.contains("preset")) {
        config.preset = j["preset"].get<std::string>();
        apply_preset(config, *config.preset);
    }
    if (j.contains("dataset")) config.dataset_path = j["dataset"].get<std::string>();
    if (j.contains("output_dir")) config.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("wrapper")) config.wrapper = j["wrapper"].get<std::string>();
    wrapper_preset(config.wrapper);  // validates the name
    if (j.contains("max_context_tokens")) {
        config.max_context_tokens = j["max_context_tokens"].get<int>();
        if (config.max_context_tokens < 8) {
            throw InvalidArgument("run config: max_context_tokens too small");
        }
    }
    if (j.contains("workers")) {
        config.workers = j["workers"].get<int>();
        if (config.workers < 1) throw InvalidArgument("run config: workers must be >= 1");
    }
    if (j.contains("tagger_model")) config.tagger_model_path = j["tagger_model"].get<std::string>();
    if (j.contains("abbreviations")) {
        config.abbreviations_path = j["abbreviations"].get<std::string>();
    }
    if (j.contains("metrics")) {
        for (const auto& name : j["metrics"]) {
            const std::string metric = name.get<std::string>();
            if (!kKnownMetrics.count(metric)) {
                throw InvalidArgument("run config: unknown metric '" + metric + "'");
            }
            config.metrics.insert(metric);
        }
    }
    if (j.contains("prompt")) {
        const auto& p = j["prompt"];
        if (p.contains("conciseness") && !p["conciseness"].is_null()) {
            config.prompt.conciseness = p["conciseness"].get<int>();
            if (*config.prompt.conciseness < 1) {
                throw InvalidArgument("run config: conciseness must be >= 1");
            }
        }
        if (p.contains("narrative_first_person")) {
            config.prompt.narrative_first_person = p["narrative_first_person"].get<bool>();
        }
        if (p.contains("use_keywords")) {
            config.prompt.use_keywords = p["use_keywords"].get<bool>();
        }
        if (p.contains("task_variant")) {
            config.prompt.task_variant =
                task_variant_from_string(p["task_variant"].get<std::string>());
        }
    }
    if (j.contains("guidance")) {
        const auto& g = j["guidance"];
        if (g.contains("gamma")) config.guidance.gamma = g["gamma"].get<double>();
        if (g.contains("temperature")) config.guidance.temperature = g["temperature"].get<double>();
        if (g.contains("top_p")) config.guidance.top_p = g["top_p"].get<double>();
        if (g.contains("max_new_tokens")) {
            config.guidance.max_new_tokens = g["max_new_tokens"].get<int>();
        }
        if (g.contains("seed")) config.guidance.seed = g["seed"].get<uint64_t>();
        if (g.contains("greedy")) config.guidance.greedy = g["greedy"].get<bool>();
        config.guidance.validate();
    }
    if (j.contains("provider")) {
        const auto& p = j["provider"];
        config.provider.type = p.value("type", std::string("toy"));
        if (config.provider.type == "toy") {
            if (p.contains("corpus")) {
                config.provider.toy.corpus_path = p["corpus"].get<std::string>();
            }
            if (p.contains("keyword_bonus")) {
                config.provider.toy.keyword_bonus = p["keyword_bonus"].get<double>();
            }
            if (p.contains("keywords")) {
                config.provider.toy.keywords =
                    p["keywords"].get<std::vector<std::string>>();
            }
            if (p.contains("trigger")) {
                config.provider.toy.trigger = p["trigger"].get<std::string>();
            }
        } else if (config.provider.type == "http") {
            config.provider.http.endpoint = p.value("endpoint", std::string());
            if (p.contains("top_k")) config.provider.http.top_k = p["top_k"].get<int>();
            if (p.contains("timeout_ms")) {
                config.provider.http.timeout_ms = p["timeout_ms"].get<int>();
            }
            if (p.contains("retries")) config.provider.http.retries = p["retries"].get<int>();
        } else {
            throw InvalidArgument("run config: unknown provider type '" +
                                  config.provider.type + "'");
        }
        if (p.contains("vocab")) {
            config.provider.http_vocab_path = p["vocab"].get<std::string>();
        }
    }
    return config;
}

RunConfig RunConfig::from_file(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("run config " + path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["dataset"] = dataset_path;
    j["output_dir"] = output_dir;
    if (preset) j["preset"] = *preset;
    j["wrapper"] = wrapper;
    j["max_context_tokens"] = max_context_tokens;
    j["workers"] = workers;
    if (!tagger_model_path.empty()) j["tagger_model"] = tagger_model_path;
    if (!abbreviations_path.empty()) j["abbreviations"] = abbreviations_path;
    if (!metrics.empty()) j["metrics"] = metrics;
    nlohmann::json p;
    if (prompt.conciseness) p["conciseness"] = *prompt.conciseness;
    p["narrative_first_person"] = prompt.narrative_first_person;
    p["use_keywords"] = prompt.use_keywords;
    p["task_variant"] = to_string(prompt.task_variant);
    j["prompt"] = p;
    j["guidance"] = {
        {"gamma", guidance.gamma},           {"temperature", guidance.temperature},
        {"top_p", guidance.top_p},           {"max_new_tokens", guidance.max_new_tokens},
        {"seed", guidance.seed},             {"greedy", guidance.greedy},
    };
    nlohmann::json prov;
    prov["type"] = provider.type;
    if (provider.type == "toy") {
        prov["corpus"] = provider.toy.corpus_path;
        prov["keyword_bonus"] = provider.toy.keyword_bonus;
        prov["keywords"] = provider.toy.keywords;
        prov["trigger"] = provider.toy.trigger;
    } else {
        prov["endpoint"] = provider.http.endpoint;
        prov["top_k"] = provider.http.top_k;
        prov["timeout_ms"] = provider.http.timeout_ms;
        prov["retries"] = provider.http.retries;
        if (!provider.http_vocab_path.empty()) prov["vocab"] = provider.http_vocab_path;
    }
    j["provider"] = prov;
    return j;
}

ProviderBundle make_provider(const ProviderConfig& config) {
    ProviderBundle bundle;
    if (config.type == "toy") {
        if (config.toy.corpus_path.empty()) {
            throw InvalidArgument("toy provider: 'corpus' path is required");
        }
        ToyTextLm lm = build_toy_text_lm(read_file(config.toy.corpus_path),
                                         config.toy.keyword_bonus, config.toy.keywords,
                                         config.toy.trigger);
        bundle.provider = lm.provider;
        bundle.codec = lm.codec;
        return bundle;
    }
    if (config.type == "http") {
        HttpProviderConfig http = config.http;
        if (const char* env = std::getenv("INTENTSUM_PROVIDER_ENDPOINT")) {
            http.endpoint = env;
        }
        if (http.endpoint.empty()) {
            throw InvalidArgument("http provider: no endpoint configured");
        }
        bundle.provider = std::make_shared<HttpProvider>(http);
        if (config.http_vocab_path.empty()) {
            throw InvalidArgument("http provider: 'vocab' path is required for text runs");
        }
        std::vector<std::string> words;
        std::istringstream in(read_file(config.http_vocab_path));
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) words.push_back(line);
        }
        bundle.codec = std::make_shared<VocabCodec>(std::move(words));
        return bundle;
    }
    throw InvalidArgument("unknown provider type: " + config.type);
}

}  // namespace intentsum
