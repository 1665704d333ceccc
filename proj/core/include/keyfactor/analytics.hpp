#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "keyfactor/matrix.hpp"

namespace keyfactor {

enum class Region { Dominant, Dynamic, Reactive, Isolated };

std::string_view to_string(Region region);

/// Classification and key-factor thresholds.
///
/// Regions are decided on the ratio active_norm / passive_norm: at or above
/// dominant_ratio is Dominant, at or below reactive_ratio is Reactive, and
/// anything between is Dynamic. key_threshold applies to the combined
/// normalized score active_norm + passive_norm (range 0..200).
struct AnalysisConfig {
    double dominant_ratio = 2.0;
    double reactive_ratio = 0.5;
    double key_threshold = 75.0;
    int display_decimals = 1;

    /// Throws std::invalid_argument when the thresholds are inconsistent.
    void validate() const;
};

struct FactorScore {
    Factor factor;
    Count active_sum = 0;
    Count passive_sum = 0;
    double active_norm = 0.0;
    double passive_norm = 0.0;
    std::size_t active_rank = 0;
    std::size_t passive_rank = 0;
    Region region = Region::Isolated;
    bool key = false;
};

using FactorScores = std::vector<FactorScore>;

struct NormalizedSums {
    std::vector<double> active;
    std::vector<double> passive;
};

/// 100 * x / max(axis); an all-zero axis stays zero. Full precision.
NormalizedSums normalize_sums(const SumsTable &table);

/// Descending competition ranking ("1224"): rank = 1 + #strictly greater.
std::vector<std::size_t> competition_rank(std::span<const Count> values);

/// Both norms must lie in [0, 100]; throws std::domain_error otherwise.
Region classify(double active_norm, double passive_norm, const AnalysisConfig &cfg);

std::vector<bool> select_key_factors(std::span<const FactorScore> scores, const AnalysisConfig &cfg);

/// Half away from zero at the given number of decimals.
double round_display(double value, int decimals);

FactorScores analyze(const SumsTable &table, const AnalysisConfig &cfg = {});
FactorScores analyze(const ChainSet &chains, const AnalysisConfig &cfg = {});

}  // namespace keyfactor
