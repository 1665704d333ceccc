#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "keyfactor/model.hpp"

namespace keyfactor {

using Count = std::uint64_t;

/// Square count matrix of observed transitions between factors.
/// count(r, c) is how often factor r immediately precedes factor c.
/// Factors are grouped by category, then ordered by first appearance;
/// ids run 1..n in that order.
class RelationshipMatrix {
public:
    RelationshipMatrix() = default;

    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }

    const std::vector<Factor> &factors() const noexcept { return factors_; }
    /// 0-based index of the factor with this identity.
    std::optional<std::size_t> index_of(const FactorKey &key) const;

    Count count(std::size_t row, std::size_t col) const { return counts_.at(row * size() + col); }
    std::span<const Count> row(std::size_t r) const {
        return std::span<const Count>(counts_).subspan(r * size(), size());
    }

    Count total() const;

    friend bool operator==(const RelationshipMatrix &, const RelationshipMatrix &) = default;

private:
    friend class MatrixAssembler;

    std::vector<Factor> factors_;
    std::vector<Count> counts_;  // row-major, size() * size()
};

/// Throws ChainValidationError for the first invalid chain; no partial result.
RelationshipMatrix build_matrix(const ChainSet &chains);

/// Union of factors by identity, counts added cell-wise. Within a category
/// a's factors keep their order and b's new factors follow.
RelationshipMatrix merge(const RelationshipMatrix &a, const RelationshipMatrix &b);

struct FactorSums {
    Factor factor;
    Count active = 0;   // row sum: influence exerted
    Count passive = 0;  // column sum: influence received

    friend bool operator==(const FactorSums &, const FactorSums &) = default;
};

using SumsTable = std::vector<FactorSums>;

SumsTable sums(const RelationshipMatrix &m);

/// Independent reference for sums(build_matrix(chains)): walks every step pair
/// against a flat factor list without building a matrix.
SumsTable brute_force_sums(const ChainSet &chains);

}  // namespace keyfactor
