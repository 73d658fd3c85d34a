#pragma once

#include <vector>

namespace sqws {

// Glass-bridge model: n independent steps, each a misstep with probability
// 1/m; player k crosses first iff exactly k-1 predecessors fell.
struct BridgeConfig {
    long long steps = 0;             // n >= 1
    long long fail_denominator = 0;  // m >= 1, per-step misstep probability 1/m

    void validate() const;  // throws std::invalid_argument
};

// first_crosser[k-1] = Pr(player k is first across) for k = 1..n+1.
// survival[k-1]      = Pr(player k survives)        for k = 1..n+1.
struct BridgeResult {
    BridgeConfig config;
    std::vector<double> first_crosser;
    std::vector<double> survival;
    double expected_first_crosser = 0.0;
};

std::vector<double> first_crosser_pmf(const BridgeConfig& cfg);

// Pr(fewer than k missteps in n steps); exactly 1 for k >= n+1.
double survival_probability(const BridgeConfig& cfg, long long player);

// 1 + n/m.
double expected_first_crosser(const BridgeConfig& cfg);

BridgeResult bridge_table(const BridgeConfig& cfg);

}  // namespace sqws
