#pragma once

#include <cstdint>
#include <vector>

#include "intentsum/distribution.hpp"
#include "intentsum/provider.hpp"
#include "intentsum/sampler.hpp"

namespace intentsum {

struct GuidanceConfig {
    double gamma = 1.5;       // guidance strength, >= 1
    double temperature = 0.8;
    double top_p = 0.95;
    int max_new_tokens = 256;
    uint64_t seed = 0;
    bool greedy = false;

    void validate() const;
};

// Guidance weighting of a conditional against an unconditional next-token
// distribution: combined logit = gamma * cond - (gamma - 1) * uncond,
// renormalized. gamma = 1 returns the conditional distribution unchanged.
// Tokens floored on either side stay floored.
TokenDistribution cfg_combine(const TokenDistribution& logp_cond,
                              const TokenDistribution& logp_uncond, double gamma);

// Dual-context guided decoding: both contexts are queried each step, the
// combined distribution is sampled once, and the same token is appended
// to both. Stops at the provider's end token (not included in the output)
// or after max_new_tokens. Reproducible for a fixed seed.
std::vector<int> generate(Provider& provider, const std::vector<int>& cond_prompt,
                          const std::vector<int>& uncond_prompt,
                          const GuidanceConfig& config);

// Single-context sampling with the same stopping and seeding rules;
// equals generate() with gamma = 1 token for token.
std::vector<int> generate_plain(Provider& provider, const std::vector<int>& prompt,
                                const GuidanceConfig& config);

}  // namespace intentsum
