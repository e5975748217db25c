#pragma once

#include <cstdint>
#include <vector>

namespace intentsum {

// Tokens absent from a distribution (e.g. outside a remote provider's
// top-k) carry this floor instead of -inf so arithmetic stays finite.
inline constexpr double kLogProbFloor = -1e9;

// Log-probabilities over a contiguous token-id vocabulary; index = id.
struct TokenDistribution {
    std::vector<double> logprobs;

    int vocabulary_size() const { return static_cast<int>(logprobs.size()); }
};

inline bool is_floored(double logprob) { return logprob <= kLogProbFloor; }

// exp-sum of the non-floored entries; 1.0 +- 1e-6 for a valid distribution.
double prob_mass(const TokenDistribution& dist);

// Renormalizes logits into logprobs, leaving floored entries at the floor.
// Throws DecodeFailure when every entry is floored.
TokenDistribution log_softmax(std::vector<double> logits);

}  // namespace intentsum
