#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "intentsum/dataset.hpp"
#include "intentsum/errors.hpp"
#include "intentsum/keywords.hpp"
#include "intentsum/report.hpp"
#include "intentsum/runner.hpp"
#include "intentsum/tagger.hpp"

namespace fs = std::filesystem;
using namespace intentsum;

namespace {

int cmd_generate(const std::string& config_path, const std::string& dataset_override,
                 double gamma_override, long long seed_override) {
    RunConfig config = RunConfig::from_file(config_path);
    if (!dataset_override.empty()) config.dataset_path = dataset_override;
    if (gamma_override >= 0) config.guidance.gamma = gamma_override;
    if (seed_override >= 0) config.guidance.seed = static_cast<uint64_t>(seed_override);
    config.guidance.validate();
    if (config.dataset_path.empty()) {
        throw InvalidArgument("no dataset configured (use --dataset or the config file)");
    }

    const auto records = load_dataset(config.dataset_path);
    const GenerateOutcome outcome = run_generate(records, config);
    std::cout << "generated " << outcome.generated << ", skipped " << outcome.skipped
              << ", failed " << outcome.failures.size() << "\n";
    for (const auto& failure : outcome.failures) {
        std::cerr << "error: " << failure << "\n";
    }
    return outcome.ok() ? 0 : 1;
}

int cmd_eval(const std::string& config_path, std::string summaries_dir,
             std::string out_dir) {
    RunConfig config = RunConfig::from_file(config_path);
    if (config.dataset_path.empty()) {
        throw InvalidArgument("config has no dataset path");
    }
    if (summaries_dir.empty()) {
        summaries_dir = (fs::path(config.output_dir) / "summaries").string();
    }
    if (out_dir.empty()) out_dir = config.output_dir;

    const auto records = load_dataset(config.dataset_path);
    const EvalReport report = run_eval(records, summaries_dir, config);
    write_report_files(report, out_dir);
    write_run_meta(config, records.size());
    std::cout << render_report(report, ReportFormat::kMarkdown);
    return 0;
}

int cmd_report(const std::string& in_path, const std::string& format_name,
               const std::string& out_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw IoError("cannot open report: " + in_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("report " + in_path + ": " + e.what());
    }
    const EvalReport report = report_from_json(j);
    const std::string rendered = render_report(report, report_format_from_string(format_name));
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot write report: " + out_path);
        out << rendered;
    }
    return 0;
}

int cmd_train_tagger(const std::string& corpus_path, const std::string& out_path,
                     int epochs, uint64_t seed, double heldout) {
    auto corpus = load_tagged_corpus(corpus_path);
    if (corpus.empty()) throw InvalidArgument("tagged corpus is empty: " + corpus_path);

    std::vector<std::vector<TaggedToken>> train = corpus, held;
    if (heldout > 0.0) {
        // Deterministic split: shuffle sentence indices, hold out the tail.
        std::vector<size_t> order(corpus.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        const size_t held_count = static_cast<size_t>(heldout * corpus.size());
        train.clear();
        for (size_t i = 0; i < order.size(); ++i) {
            if (i + held_count < order.size()) {
                train.push_back(corpus[order[i]]);
            } else {
                held.push_back(corpus[order[i]]);
            }
        }
    }

    const TaggerModel model = train_tagger(train, epochs, seed);
    model.save(out_path);
    std::cout << "trained on " << train.size() << " sentences, " << model.tag_set().size()
              << " tags, lexicon " << model.lexicon().size() << " -> " << out_path << "\n";

    if (!held.empty()) {
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
        std::cout << "held-out accuracy: " << static_cast<double>(correct) / total << " ("
                  << correct << "/" << total << " tokens, " << held.size()
                  << " sentences)\n";
    }
    return 0;
}

int cmd_extract_keywords(const std::string& model_path, const std::string& in_path) {
    const TaggerModel model = TaggerModel::load(model_path);
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw IoError("cannot open input: " + in_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const KeywordSet keywords = extract_keywords(buffer.str(), model);
    std::cout << keywords.comma_separated() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controllable summarization engine and evaluation toolkit"};
    app.require_subcommand(1);

    std::string config_path, dataset_override, summaries_dir, out_dir;
    double gamma_override = -1.0;
    long long seed_override = -1;

    auto* generate = app.add_subcommand("generate", "Generate summaries for a dataset");
    generate->add_option("--config", config_path, "Run config (JSON)")->required();
    generate->add_option("--dataset", dataset_override, "Dataset path override (JSONL)");
    generate->add_option("--gamma", gamma_override, "Guidance strength override");
    generate->add_option("--seed", seed_override, "Run seed override");

    auto* eval = app.add_subcommand("eval", "Score generated summaries");
    eval->add_option("--config", config_path, "Run config (JSON)")->required();
    eval->add_option("--summaries", summaries_dir, "Summaries directory");
    eval->add_option("--out", out_dir, "Report output directory");

    std::string report_in, report_format = "markdown", report_out;
    auto* report = app.add_subcommand("report", "Re-render an existing report.json");
    report->add_option("--in", report_in, "Path to report.json")->required();
    report->add_option("--format", report_format, "csv, json or markdown");
    report->add_option("--out", report_out, "Output path (stdout when omitted)");

    std::string corpus_path, model_out;
    int epochs = 5;
    uint64_t train_seed = 1;
    double heldout = 0.0;
    auto* train = app.add_subcommand("train-tagger", "Train the keyword POS tagger");
    train->add_option("--corpus", corpus_path, "Tagged corpus (word_TAG lines)")->required();
    train->add_option("--out", model_out, "Model output path")->required();
    train->add_option("--epochs", epochs, "Training epochs");
    train->add_option("--seed", train_seed, "Shuffle seed");
    train->add_option("--heldout", heldout, "Held-out fraction reported after training");

    std::string model_path, keywords_in;
    auto* extract = app.add_subcommand("extract-keywords", "POS-filter a draft summary");
    extract->add_option("--model", model_path, "Tagger model path")->required();
    extract->add_option("--in", keywords_in, "Draft summary text file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            return cmd_generate(config_path, dataset_override, gamma_override, seed_override);
        }
        if (eval->parsed()) return cmd_eval(config_path, summaries_dir, out_dir);
        if (report->parsed()) return cmd_report(report_in, report_format, report_out);
        if (train->parsed()) {
            return cmd_train_tagger(corpus_path, model_out, epochs, train_seed, heldout);
        }
        if (extract->parsed()) return cmd_extract_keywords(model_path, keywords_in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
