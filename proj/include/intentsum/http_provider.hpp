#pragma once

#include <memory>
#include <string>

#include "intentsum/provider.hpp"

namespace intentsum {

// Client for the remote next-token wire protocol (version 1):
//   request  POST {"context": [ids] | {"text": s}, "top_k": k}
//   response {"logprobs": [{"token": id, "logprob": x}, ...],
//             "eos_token": id, "vocab_size": n}
// Tokens outside the returned top-k are floored; when any are missing the
// distribution is renormalized over the returned set and the provider is
// flagged as approximating.
struct HttpProviderConfig {
    std::string endpoint;     // e.g. http://127.0.0.1:8080/v1/logprobs
    int top_k = 1000;         // must be >= 100
    int timeout_ms = 30000;
    int retries = 2;          // additional attempts after the first
};

class HttpProvider : public Provider {
public:
    explicit HttpProvider(HttpProviderConfig config);
    ~HttpProvider() override;

    TokenDistribution next_logprobs(const std::vector<int>& context) override;
    // Known only after the first successful request.
    int end_token() const override;
    int vocab_size() const override;
    bool topk_approximation() const override { return approximated_; }

private:
    struct Impl;
    HttpProviderConfig config_;
    std::unique_ptr<Impl> impl_;
    int end_token_ = -1;
    int vocab_size_ = -1;
    bool approximated_ = false;
};

}  // namespace intentsum
