#include "intentsum/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "intentsum/errors.hpp"

namespace intentsum {

namespace {

// Uniform double in [0, 1) from the top 53 bits; bit-stable across
// standard library implementations.
double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

int sample_token(const TokenDistribution& dist, double temperature, double top_p, Rng& rng) {
    if (temperature <= 0.0) throw InvalidArgument("sample_token: temperature must be > 0");
    if (top_p <= 0.0 || top_p > 1.0) {
        throw InvalidArgument("sample_token: top_p must be in (0, 1]");
    }
    if (dist.logprobs.empty()) throw DecodeFailure("sample_token: empty distribution");

    std::vector<double> scaled(dist.logprobs.size());
    for (size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] = is_floored(dist.logprobs[i]) ? kLogProbFloor
                                                 : dist.logprobs[i] / temperature;
    }
    const TokenDistribution tempered = log_softmax(std::move(scaled));

    std::vector<int> order(tempered.logprobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double pa = tempered.logprobs[a];
        double pb = tempered.logprobs[b];
        if (pa != pb) return pa > pb;
        return a < b;
    });

    size_t nucleus_size = 0;
    double nucleus_mass = 0.0;
    for (size_t i = 0; i < order.size(); ++i) {
        double lp = tempered.logprobs[order[i]];
        if (is_floored(lp)) break;
        nucleus_mass += std::exp(lp);
        nucleus_size = i + 1;
        if (nucleus_mass >= top_p) break;
    }
    if (nucleus_size == 0) throw DecodeFailure("sample_token: degenerate distribution");

    const double u = uniform01(rng) * nucleus_mass;
    double cumulative = 0.0;
    for (size_t i = 0; i < nucleus_size; ++i) {
        cumulative += std::exp(tempered.logprobs[order[i]]);
        if (u < cumulative) return order[i];
    }
    return order[nucleus_size - 1];
}

int argmax_token(const TokenDistribution& dist) {
    int best = -1;
    double best_lp = kLogProbFloor;
    for (size_t i = 0; i < dist.logprobs.size(); ++i) {
        if (!is_floored(dist.logprobs[i]) && dist.logprobs[i] > best_lp) {
            best_lp = dist.logprobs[i];
            best = static_cast<int>(i);
        }
    }
    if (best < 0) throw DecodeFailure("argmax_token: degenerate distribution");
    return best;
}

}  // namespace intentsum
