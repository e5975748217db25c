#include "intentsum/http_provider.hpp"

#include <cmath>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "intentsum/errors.hpp"

namespace intentsum {

namespace {

// Splits "http://host:port/path" into base url and path.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
    auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos) {
        throw InvalidArgument("http provider: endpoint must include a scheme: " + endpoint);
    }
    auto path_start = endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {endpoint, "/"};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

}  // namespace

struct HttpProvider::Impl {
    httplib::Client client;
    std::string path;

    Impl(const std::string& base, std::string p, int timeout_ms)
        : client(base), path(std::move(p)) {
        client.set_connection_timeout(0, timeout_ms * 1000);
        client.set_read_timeout(timeout_ms / 1000, (timeout_ms % 1000) * 1000);
    }
};

HttpProvider::HttpProvider(HttpProviderConfig config) : config_(std::move(config)) {
    if (config_.top_k < 100) {
        throw InvalidArgument("http provider: top_k must be >= 100 (partial logprobs are "
                              "too lossy below that)");
    }
    auto [base, path] = split_endpoint(config_.endpoint);
    impl_ = std::make_unique<Impl>(base, path, config_.timeout_ms);
}

HttpProvider::~HttpProvider() = default;

int HttpProvider::end_token() const {
    if (end_token_ < 0) {
        throw ProviderError("http provider: end token unknown before the first response");
    }
    return end_token_;
}

int HttpProvider::vocab_size() const {
    if (vocab_size_ < 0) {
        throw ProviderError("http provider: vocab size unknown before the first response");
    }
    return vocab_size_;
}

TokenDistribution HttpProvider::next_logprobs(const std::vector<int>& context) {
    nlohmann::json request = {{"context", context}, {"top_k", config_.top_k}};
    const std::string body = request.dump();

    std::string error;
    for (int attempt = 0; attempt <= config_.retries; ++attempt) {
        auto res = impl_->client.Post(impl_->path, body, "application/json");
        if (!res) {
            error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            error = "http status " + std::to_string(res->status);
            continue;
        }
        nlohmann::json response;
        try {
            response = nlohmann::json::parse(res->body);
            const int vocab = response.at("vocab_size").get<int>();
            const int eos = response.at("eos_token").get<int>();
            if (vocab < 2 || eos < 0 || eos >= vocab) {
                throw ParseError("invalid vocab_size/eos_token");
            }
            std::vector<double> logits(static_cast<size_t>(vocab), kLogProbFloor);
            size_t filled = 0;
            for (const auto& entry : response.at("logprobs")) {
                const int token = entry.at("token").get<int>();
                const double logprob = entry.at("logprob").get<double>();
                if (token < 0 || token >= vocab) {
                    throw ParseError("logprob token id out of range");
                }
                if (is_floored(logits[token])) ++filled;
                logits[token] = std::max(logprob, kLogProbFloor + 1.0);
            }
            if (filled == 0) throw ParseError("no logprobs in response");
            if (filled < static_cast<size_t>(vocab)) approximated_ = true;
            end_token_ = eos;
            vocab_size_ = vocab;
            return log_softmax(std::move(logits));
        } catch (const std::exception& e) {
            error = std::string("bad response: ") + e.what();
            continue;
        }
    }
    throw ProviderError("http provider: " + error + " (endpoint " + config_.endpoint + ")");
}

}  // namespace intentsum
