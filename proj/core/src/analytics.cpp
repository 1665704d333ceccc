#include "keyfactor/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace keyfactor {

std::string_view to_string(Region region) {
    switch (region) {
    case Region::Dominant: return "Dominant";
    case Region::Dynamic: return "Dynamic";
    case Region::Reactive: return "Reactive";
    case Region::Isolated: return "Isolated";
    }
    return "Unknown";
}

void AnalysisConfig::validate() const {
    if (!(dominant_ratio > 0.0) || !std::isfinite(dominant_ratio)) {
        throw std::invalid_argument(fmt::format("dominant ratio must be positive, got {}", dominant_ratio));
    }
    if (!(reactive_ratio > 0.0) || !std::isfinite(reactive_ratio)) {
        throw std::invalid_argument(fmt::format("reactive ratio must be positive, got {}", reactive_ratio));
    }
    if (!(reactive_ratio < dominant_ratio)) {
        throw std::invalid_argument(fmt::format("reactive ratio {} must be below dominant ratio {}",
                                                reactive_ratio, dominant_ratio));
    }
    if (!(key_threshold >= 0.0 && key_threshold <= 200.0)) {
        throw std::invalid_argument(fmt::format("key threshold must lie in [0, 200], got {}", key_threshold));
    }
    if (display_decimals < 0 || display_decimals > 9) {
        throw std::invalid_argument(fmt::format("display decimals must lie in [0, 9], got {}", display_decimals));
    }
}

NormalizedSums normalize_sums(const SumsTable &table) {
    Count max_active = 0;
    Count max_passive = 0;
    for (const auto &row : table) {
        max_active = std::max(max_active, row.active);
        max_passive = std::max(max_passive, row.passive);
    }
    auto scale = [](Count x, Count max) {
        return max == 0 ? 0.0 : 100.0 * static_cast<double>(x) / static_cast<double>(max);
    };
    NormalizedSums out;
    out.active.reserve(table.size());
    out.passive.reserve(table.size());
    for (const auto &row : table) {
        out.active.push_back(scale(row.active, max_active));
        out.passive.push_back(scale(row.passive, max_passive));
    }
    return out;
}

std::vector<std::size_t> competition_rank(std::span<const Count> values) {
    std::vector<Count> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    std::vector<std::size_t> ranks;
    ranks.reserve(values.size());
    for (const Count v : values) {
        // Elements strictly greater than v form the prefix of the descending order.
        const auto greater = std::lower_bound(sorted.begin(), sorted.end(), v, std::greater<>{}) - sorted.begin();
        ranks.push_back(static_cast<std::size_t>(greater) + 1);
    }
    return ranks;
}

Region classify(double active_norm, double passive_norm, const AnalysisConfig &cfg) {
    auto in_range = [](double x) { return x >= 0.0 && x <= 100.0; };
    if (!in_range(active_norm) || !in_range(passive_norm)) {
        throw std::domain_error(
            fmt::format("normalized sums must lie in [0, 100], got ({}, {})", active_norm, passive_norm));
    }
    if (active_norm == 0.0 && passive_norm == 0.0) return Region::Isolated;
    if (passive_norm == 0.0) return Region::Dominant;
    if (active_norm == 0.0) return Region::Reactive;
    const double ratio = active_norm / passive_norm;
    if (ratio >= cfg.dominant_ratio) return Region::Dominant;
    if (ratio <= cfg.reactive_ratio) return Region::Reactive;
    return Region::Dynamic;
}

std::vector<bool> select_key_factors(std::span<const FactorScore> scores, const AnalysisConfig &cfg) {
    std::vector<bool> key;
    key.reserve(scores.size());
    for (const auto &s : scores) key.push_back(s.active_norm + s.passive_norm >= cfg.key_threshold);
    return key;
}

double round_display(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    // std::round is half away from zero.
    return std::round(value * scale) / scale;
}

FactorScores analyze(const SumsTable &table, const AnalysisConfig &cfg) {
    cfg.validate();
    const auto norms = normalize_sums(table);

    std::vector<Count> active(table.size());
    std::vector<Count> passive(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        active[i] = table[i].active;
        passive[i] = table[i].passive;
    }
    const auto active_rank = competition_rank(active);
    const auto passive_rank = competition_rank(passive);

    FactorScores scores;
    scores.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        FactorScore s;
        s.factor = table[i].factor;
        s.active_sum = table[i].active;
        s.passive_sum = table[i].passive;
        s.active_norm = norms.active[i];
        s.passive_norm = norms.passive[i];
        s.active_rank = active_rank[i];
        s.passive_rank = passive_rank[i];
        s.region = classify(s.active_norm, s.passive_norm, cfg);
        scores.push_back(std::move(s));
    }
    const auto key = select_key_factors(scores, cfg);
    for (std::size_t i = 0; i < scores.size(); ++i) scores[i].key = key[i];
    return scores;
}

FactorScores analyze(const ChainSet &chains, const AnalysisConfig &cfg) {
    return analyze(sums(build_matrix(chains)), cfg);
}

}  // namespace keyfactor
