#include "intentsum/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "intentsum/errors.hpp"

namespace intentsum {

double prob_mass(const TokenDistribution& dist) {
    double mass = 0.0;
    for (double lp : dist.logprobs) {
        if (!is_floored(lp)) mass += std::exp(lp);
    }
    return mass;
}

TokenDistribution log_softmax(std::vector<double> logits) {
    double max_logit = kLogProbFloor;
    for (double x : logits) {
        if (!is_floored(x)) max_logit = std::max(max_logit, x);
    }
    if (is_floored(max_logit)) {
        throw DecodeFailure("log_softmax: all entries floored");
    }
    double sum = 0.0;
    for (double x : logits) {
        if (!is_floored(x)) sum += std::exp(x - max_logit);
    }
    const double lse = max_logit + std::log(sum);
    for (double& x : logits) {
        x = is_floored(x) ? kLogProbFloor : x - lse;
    }
    return TokenDistribution{std::move(logits)};
}

}  // namespace intentsum
