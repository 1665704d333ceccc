#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "keyfactor/analytics.hpp"
#include "keyfactor/matrix.hpp"

namespace keyfactor {

struct SumRanks {
    std::vector<std::size_t> active;
    std::vector<std::size_t> passive;
};

SumRanks rank_sums(const SumsTable &table);

/// Matrix with trailing active_sum/active_rank columns and passive_sum/
/// passive_rank rows. Zero cells are empty fields. Empty matrix: header only.
std::string export_matrix_csv(const RelationshipMatrix &m, const SumsTable &sums, const SumRanks &ranks);

/// One row per factor in input order; norms rounded to `decimals`.
std::string export_report_csv(const FactorScores &scores, int decimals = 1);

/// Canvas geometry of the active/passive diagram. The plot square maps
/// [0,100]^2 affinely onto the area inside the margins, origin bottom-left.
struct PlotLayout {
    int width = 800;
    int height = 800;
    int margin_left = 70;
    int margin_right = 30;
    int margin_top = 30;
    int margin_bottom = 70;
    int label_offset = 7;

    double x_of(double passive_norm) const;
    double y_of(double active_norm) const;
};

/// Active sum on y, passive sum on x, both normalized. Byte-deterministic.
std::string render_scatter_svg(const FactorScores &scores, const AnalysisConfig &cfg,
                               const PlotLayout &layout = {});

std::string export_dot(const RelationshipMatrix &m);

}  // namespace keyfactor
