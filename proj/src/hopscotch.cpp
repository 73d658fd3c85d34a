#include "sqws/hopscotch.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace sqws {

void BridgeConfig::validate() const {
    if (steps < 1) throw std::invalid_argument("bridge needs at least one step");
    if (fail_denominator < 1) throw std::invalid_argument("fail denominator must be >= 1");
}

// Binomial pmf over misstep counts, by the multiplicative recurrence
//   pmf(k+1) = pmf(k) * (n-k+1)/k * 1/(m-1)
// carried in log space. Extended precision keeps the normalization error for
// n = 10^4 well under 1e-12; entries that underflow double are genuinely
// negligible mass.
std::vector<double> first_crosser_pmf(const BridgeConfig& cfg) {
    cfg.validate();
    const std::size_t n = static_cast<std::size_t>(cfg.steps);
    std::vector<double> pmf(n + 1, 0.0);
    if (cfg.fail_denominator == 1) {
        // every step is a misstep: all n predecessors fall, player n+1 crosses
        pmf[n] = 1.0;
        return pmf;
    }
    const long double m = static_cast<long double>(cfg.fail_denominator);
    const long double log_ratio = -std::log(m - 1.0L);  // log(p/q)
    long double log_p = static_cast<long double>(n) * std::log1p(-1.0L / m);  // q^n
    pmf[0] = static_cast<double>(std::exp(log_p));
    for (std::size_t k = 1; k <= n; ++k) {
        log_p += std::log(static_cast<long double>(n - k + 1) / static_cast<long double>(k)) + log_ratio;
        pmf[k] = static_cast<double>(std::exp(log_p));
    }
    return pmf;
}

double survival_probability(const BridgeConfig& cfg, long long player) {
    cfg.validate();
    if (player < 1) throw std::invalid_argument("player numbers start at 1");
    if (player >= cfg.steps + 1) return 1.0;  // path fully discovered before their turn
    const std::vector<double> pmf = first_crosser_pmf(cfg);
    double cumulative = 0.0;
    for (long long x = 0; x < player; ++x) cumulative += pmf[static_cast<std::size_t>(x)];
    return cumulative;
}

double expected_first_crosser(const BridgeConfig& cfg) {
    cfg.validate();
    return 1.0 + static_cast<double>(cfg.steps) / static_cast<double>(cfg.fail_denominator);
}

BridgeResult bridge_table(const BridgeConfig& cfg) {
    BridgeResult result;
    result.config = cfg;
    result.first_crosser = first_crosser_pmf(cfg);
    result.survival.resize(result.first_crosser.size());
    double cumulative = 0.0;
    for (std::size_t i = 0; i < result.first_crosser.size(); ++i) {
        cumulative += result.first_crosser[i];
        result.survival[i] = cumulative < 1.0 ? cumulative : 1.0;
    }
    result.survival.back() = 1.0;  // k = n+1 is safe with certainty
    result.expected_first_crosser = expected_first_crosser(cfg);
    return result;
}

}  // namespace sqws
