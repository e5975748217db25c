#include "intentsum/runner.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "intentsum/errors.hpp"
#include "intentsum/intent_metrics.hpp"
#include "intentsum/keywords.hpp"
#include "intentsum/metrics.hpp"
#include "intentsum/segmentation.hpp"
#include "intentsum/unicode.hpp"

namespace fs = std::filesystem;

namespace intentsum {

namespace {

constexpr const char* kVersion = "intentsum 1.0.0";

bool filename_safe(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '_' || c == '.';
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path.string());
    out << content;
    if (!out) throw IoError("failed writing file: " + path.string());
}

std::vector<std::string> configured_abbreviations(const RunConfig& config) {
    if (config.abbreviations_path.empty()) return default_abbreviations();
    return load_abbreviations(config.abbreviations_path);
}

}  // namespace

std::string summary_filename(const std::string& id) {
    static const char* hex = "0123456789ABCDEF";
    std::string name;
    for (unsigned char c : id) {
        if (filename_safe(static_cast<char>(c))) {
            name.push_back(static_cast<char>(c));
        } else {
            name.push_back('%');
            name.push_back(hex[c >> 4]);
            name.push_back(hex[c & 0xF]);
        }
    }
    return name + ".json";
}

uint64_t record_seed(uint64_t run_seed, const std::string& id) {
    // FNV-1a over the id, mixed with the run seed.
    uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : id) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash ^ run_seed;
}

std::string truncate_words(const std::string& text, size_t max_words) {
    const std::vector<char32_t> cps = decode_utf8(text);
    size_t words = 0;
    bool in_word = false;
    size_t cut = cps.size();
    for (size_t i = 0; i < cps.size(); ++i) {
        if (is_alnum(cps[i])) {
            if (!in_word) {
                in_word = true;
                ++words;
                if (words > max_words) {
                    cut = i;
                    break;
                }
            }
        } else {
            in_word = false;
        }
    }
    if (cut == cps.size()) return text;
    std::vector<char32_t> kept(cps.begin(), cps.begin() + cut);
    std::string out = encode_utf8(kept);
    // Drop trailing separators left behind by the cut.
    while (!out.empty() &&
           (out.back() == ' ' || out.back() == '\n' || out.back() == '\t' ||
            out.back() == '\r')) {
        out.pop_back();
    }
    return out;
}

namespace {

struct RecordResult {
    bool generated = false;
    bool skipped = false;
    std::string error;
};

RecordResult generate_one(const DatasetRecord& record, const RunConfig& config,
                          const ProviderBundle& bundle, const TaggerModel* tagger,
                          const fs::path& summaries_dir) {
    RecordResult result;
    const fs::path out_path = summaries_dir / summary_filename(record.id);
    if (fs::exists(out_path)) {
        result.skipped = true;
        return result;
    }
    try {
        IntentSpec spec;
        spec.task_variant = config.prompt.task_variant;
        spec.conciseness = record.conciseness_target ? record.conciseness_target
                                                     : config.prompt.conciseness;
        spec.narrative_first_person = config.prompt.narrative_first_person;
        KeywordSet keywords;
        if (config.prompt.use_keywords && record.draft_summary) {
            if (!tagger) {
                throw InvalidArgument("use_keywords requires a tagger_model in the config");
            }
            keywords = extract_keywords(*record.draft_summary, *tagger);
            spec.keywords = keywords.keywords;
        }

        const ChatWrapper wrapper = wrapper_preset(config.wrapper);
        const std::string instruction = build_instruction(spec);
        const std::string baseline_instruction = build_instruction(IntentSpec{});

        // Fit the article into the context budget: the longer of the two
        // instruction overheads decides how many article tokens survive.
        std::string article = record.article;
        bool truncated = false;
        {
            auto prompt_tokens = [&](const std::string& body, const std::string& instr) {
                return bundle.codec->encode(wrap_chat(assemble_prompt(body, instr), wrapper))
                    .size();
            };
            const size_t overhead = std::max(prompt_tokens("x", instruction),
                                             prompt_tokens("x", baseline_instruction)) - 1;
            const size_t budget = static_cast<size_t>(config.max_context_tokens);
            if (overhead + 8 > budget) {
                throw InvalidArgument("max_context_tokens leaves no room for the article");
            }
            const size_t article_tokens = bundle.codec->encode(article).size();
            if (overhead + article_tokens > budget) {
                article = truncate_words(article, budget - overhead);
                truncated = true;
            }
        }

        const std::string cond_prompt =
            wrap_chat(assemble_prompt(article, instruction), wrapper);
        const std::string uncond_prompt =
            wrap_chat(assemble_prompt(article, baseline_instruction), wrapper);

        GuidanceConfig guidance = config.guidance;
        guidance.seed = record_seed(config.guidance.seed, record.id);
        const std::vector<int> tokens =
            generate(*bundle.provider, bundle.codec->encode(cond_prompt),
                     bundle.codec->encode(uncond_prompt), guidance);
        const std::string summary = bundle.codec->decode(tokens);

        nlohmann::json meta;
        meta["gamma"] = guidance.gamma;
        meta["seed"] = guidance.seed;
        meta["truncated"] = truncated;
        meta["instruction"] = instruction;
        meta["wrapper"] = config.wrapper;
        meta["provider"] = config.provider.type;
        meta["keywords"] = keywords.keywords;
        meta["topk_approximation"] = bundle.provider->topk_approximation();
        nlohmann::json doc;
        doc["id"] = record.id;
        doc["summary"] = summary;
        doc["metadata"] = meta;
        write_file(out_path, doc.dump(2) + "\n");
        result.generated = true;
    } catch (const std::exception& e) {
        result.error = e.what();
    }
    return result;
}

}  // namespace

GenerateOutcome run_generate(const std::vector<DatasetRecord>& records,
                             const RunConfig& config) {
    const ProviderBundle bundle = make_provider(config.provider);
    TaggerModel tagger;
    bool have_tagger = false;
    if (config.prompt.use_keywords && !config.tagger_model_path.empty()) {
        tagger = TaggerModel::load(config.tagger_model_path);
        have_tagger = true;
    }

    const fs::path summaries_dir = fs::path(config.output_dir) / "summaries";
    fs::create_directories(summaries_dir);

    GenerateOutcome outcome;
    std::mutex mutex;
    const int workers = bundle.provider->concurrency_safe()
                            ? std::max(1, config.workers)
                            : 1;

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= records.size()) break;
            RecordResult r = generate_one(records[i], config, bundle,
                                          have_tagger ? &tagger : nullptr, summaries_dir);
            std::lock_guard<std::mutex> lock(mutex);
            if (r.skipped) {
                ++outcome.skipped;
            } else if (r.generated) {
                ++outcome.generated;
            } else {
                outcome.failures.push_back(records[i].id + ": " + r.error);
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    write_run_meta(config, records.size());
    return outcome;
}

EvalReport run_eval(const std::vector<DatasetRecord>& records,
                    const std::string& summaries_dir, const RunConfig& config) {
    std::map<std::string, const DatasetRecord*> by_id;
    for (const auto& record : records) by_id[record.id] = &record;

    const std::vector<std::string> abbreviations = configured_abbreviations(config);

    TaggerModel tagger;
    bool have_tagger = false;
    if (config.prompt.use_keywords && !config.tagger_model_path.empty()) {
        tagger = TaggerModel::load(config.tagger_model_path);
        have_tagger = true;
    }

    if (!fs::is_directory(summaries_dir)) {
        throw IoError("summaries directory not found: " + summaries_dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(summaries_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<ReportRow> rows;
    for (const fs::path& file : files) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(file));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("summary file " + file.string() + ": " + e.what());
        }
        const std::string id = doc.at("id").get<std::string>();
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            throw ValidationError("summary id '" + id + "' has no dataset record (" +
                                  file.string() + ")");
        }
        const DatasetRecord& record = *it->second;
        const std::string summary = doc.at("summary").get<std::string>();
        const nlohmann::json meta = doc.value("metadata", nlohmann::json::object());

        ReportRow row;
        row.id = id;
        if (meta.contains("gamma")) row.gamma = meta["gamma"].get<double>();
        if (meta.contains("seed")) row.seed = meta["seed"].get<uint64_t>();
        if (meta.contains("truncated")) row.truncated = meta["truncated"].get<bool>();

        const std::vector<std::string> summary_tokens = tokenize_words(summary);
        const std::vector<Sentence> summary_sentences = split_sentences(summary, abbreviations);

        if (config.metric_enabled("words")) {
            row.words = static_cast<double>(summary_tokens.size());
        }
        if (record.reference_summary) {
            const std::vector<std::string> ref_tokens = tokenize_words(*record.reference_summary);
            if (config.metric_enabled("rouge1")) {
                row.rouge1 = 100.0 * rouge_n(summary_tokens, ref_tokens, 1).f1;
            }
            if (config.metric_enabled("rouge2")) {
                row.rouge2 = 100.0 * rouge_n(summary_tokens, ref_tokens, 2).f1;
            }
            if (config.metric_enabled("rougeL")) {
                row.rougeL = 100.0 * rouge_l(summary_tokens, ref_tokens).f1;
            }
        }
        if (config.metric_enabled("k_conciseness")) {
            const std::optional<int> target = record.conciseness_target
                                                  ? record.conciseness_target
                                                  : config.prompt.conciseness;
            if (target) {
                row.k_conciseness = k_conciseness(*target, summary_sentences);
            }
        }
        if (config.metric_enabled("k_narrative") && !summary_sentences.empty()) {
            const NarrativeLabel target = config.prompt.narrative_first_person
                                              ? NarrativeLabel::kFirst
                                              : NarrativeLabel::kThird;
            row.k_narrative = k_narrative(target, summary_sentences);
        }
        if (config.metric_enabled("k_keywords")) {
            std::vector<std::string> keywords;
            if (meta.contains("keywords") && meta["keywords"].is_array()) {
                keywords = meta["keywords"].get<std::vector<std::string>>();
            }
            if (keywords.empty() && have_tagger && record.draft_summary) {
                keywords = extract_keywords(*record.draft_summary, tagger).keywords;
            }
            if (!keywords.empty()) {
                row.k_keywords = k_keywords(keywords, summary_tokens);
            }
        }
        if (config.metric_enabled("fkgl")) {
            try {
                row.fkgl = fkgl(summary);
            } catch (const UndefinedMetric&) {
            }
        }
        if (config.metric_enabled("novel_bigram")) {
            try {
                row.novel_bigram_pct =
                    novel_ngram_ratio(summary_tokens, tokenize_words(record.article), 2);
            } catch (const UndefinedMetric&) {
            }
        }
        rows.push_back(std::move(row));
    }

    if (rows.size() < records.size()) {
        std::cerr << "warning: " << records.size() - rows.size()
                  << " record(s) have no summary file and were not scored\n";
    }
    return aggregate_report(std::move(rows));
}

void write_run_meta(const RunConfig& config, size_t record_count) {
    nlohmann::json meta;
    meta["version"] = kVersion;
    meta["records"] = record_count;
    meta["config"] = config.to_json();
    fs::create_directories(config.output_dir);
    write_file(fs::path(config.output_dir) / "run-meta.json", meta.dump(2) + "\n");
}

}  // namespace intentsum
