#pragma once

#include <random>

#include "intentsum/distribution.hpp"

namespace intentsum {

using Rng = std::mt19937_64;

// Nucleus sampling: logits are scaled by 1/temperature and renormalized,
// the smallest prefix of tokens (by descending probability) reaching
// cumulative mass >= top_p is kept, and the draw happens inside that
// renormalized nucleus. Ties in probability resolve to the lower id.
int sample_token(const TokenDistribution& dist, double temperature, double top_p, Rng& rng);

// Greedy mode: the highest-probability token, lower id on ties.
int argmax_token(const TokenDistribution& dist);

}  // namespace intentsum
