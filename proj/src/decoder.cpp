#include "intentsum/decoder.hpp"

#include <string>

#include "intentsum/errors.hpp"

namespace intentsum {

void GuidanceConfig::validate() const {
    if (gamma < 1.0) throw InvalidArgument("guidance: gamma must be >= 1");
    if (temperature <= 0.0) throw InvalidArgument("guidance: temperature must be > 0");
    if (top_p <= 0.0 || top_p > 1.0) throw InvalidArgument("guidance: top_p must be in (0, 1]");
    if (max_new_tokens < 1) throw InvalidArgument("guidance: max_new_tokens must be >= 1");
}

TokenDistribution cfg_combine(const TokenDistribution& logp_cond,
                              const TokenDistribution& logp_uncond, double gamma) {
    if (logp_cond.vocabulary_size() != logp_uncond.vocabulary_size()) {
        throw InvalidArgument("cfg_combine: vocabulary size mismatch");
    }
    if (gamma < 1.0) throw InvalidArgument("cfg_combine: gamma must be >= 1");
    if (gamma == 1.0) return logp_cond;

    std::vector<double> combined(logp_cond.logprobs.size());
    for (size_t i = 0; i < combined.size(); ++i) {
        const double c = logp_cond.logprobs[i];
        const double u = logp_uncond.logprobs[i];
        if (is_floored(c) || is_floored(u)) {
            combined[i] = kLogProbFloor;
        } else {
            combined[i] = gamma * c - (gamma - 1.0) * u;
        }
    }
    return log_softmax(std::move(combined));
}

namespace {

TokenDistribution query(Provider& provider, const std::vector<int>& context, int step) {
    try {
        return provider.next_logprobs(context);
    } catch (const std::exception& e) {
        throw ProviderError("provider failed at step " + std::to_string(step) + ": " +
                            e.what());
    }
}

}  // namespace

std::vector<int> generate(Provider& provider, const std::vector<int>& cond_prompt,
                          const std::vector<int>& uncond_prompt,
                          const GuidanceConfig& config) {
    config.validate();
    if (cond_prompt.empty() || uncond_prompt.empty()) {
        throw InvalidArgument("generate: prompts must be non-empty");
    }
    std::vector<int> cond_ctx = cond_prompt;
    std::vector<int> uncond_ctx = uncond_prompt;
    std::vector<int> output;
    Rng rng(config.seed);
    for (int step = 0; step < config.max_new_tokens; ++step) {
        const TokenDistribution cond = query(provider, cond_ctx, step);
        const TokenDistribution uncond = query(provider, uncond_ctx, step);
        const TokenDistribution combined = cfg_combine(cond, uncond, config.gamma);
        const int token = config.greedy
                              ? argmax_token(combined)
                              : sample_token(combined, config.temperature, config.top_p, rng);
        if (token == provider.end_token()) break;
        output.push_back(token);
        cond_ctx.push_back(token);
        uncond_ctx.push_back(token);
    }
    return output;
}

std::vector<int> generate_plain(Provider& provider, const std::vector<int>& prompt,
                                const GuidanceConfig& config) {
    config.validate();
    if (prompt.empty()) throw InvalidArgument("generate_plain: prompt must be non-empty");
    std::vector<int> ctx = prompt;
    std::vector<int> output;
    Rng rng(config.seed);
    for (int step = 0; step < config.max_new_tokens; ++step) {
        const TokenDistribution dist = query(provider, ctx, step);
        const int token = config.greedy
                              ? argmax_token(dist)
                              : sample_token(dist, config.temperature, config.top_p, rng);
        if (token == provider.end_token()) break;
        output.push_back(token);
        ctx.push_back(token);
    }
    return output;
}

}  // namespace intentsum
