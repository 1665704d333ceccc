#include "keyfactor/emit.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "keyfactor/csv.hpp"

namespace keyfactor {

namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::string_view dot_shape(FactorCategory category) {
    switch (category) {
    case FactorCategory::Component: return "box";
    case FactorCategory::Function: return "ellipse";
    case FactorCategory::ControlFactor: return "diamond";
    case FactorCategory::NoiseFactor: return "hexagon";
    case FactorCategory::Action: return "parallelogram";
    case FactorCategory::Effect: return "octagon";
    case FactorCategory::Harm: return "doubleoctagon";
    }
    return "box";
}

std::string norm_text(double value, int decimals) {
    return fmt::format("{:.{}f}", round_display(value, decimals), decimals);
}

}  // namespace

SumRanks rank_sums(const SumsTable &table) {
    std::vector<Count> active;
    std::vector<Count> passive;
    for (const auto &row : table) {
        active.push_back(row.active);
        passive.push_back(row.passive);
    }
    return {competition_rank(active), competition_rank(passive)};
}

std::string export_matrix_csv(const RelationshipMatrix &m, const SumsTable &sums, const SumRanks &ranks) {
    const std::size_t n = m.size();
    std::string out;

    csv::Row header{""};
    for (const auto &f : m.factors()) header.push_back(f.label());
    header.emplace_back("active_sum");
    header.emplace_back("active_rank");
    out += csv::format_row(header);
    if (n == 0) return out;

    for (std::size_t r = 0; r < n; ++r) {
        csv::Row row{m.factors()[r].label()};
        for (const Count c : m.row(r)) row.push_back(c == 0 ? std::string{} : std::to_string(c));
        row.push_back(std::to_string(sums.at(r).active));
        row.push_back(std::to_string(ranks.active.at(r)));
        out += csv::format_row(row);
    }

    csv::Row passive{"passive_sum"};
    csv::Row passive_rank{"passive_rank"};
    for (std::size_t c = 0; c < n; ++c) {
        passive.push_back(std::to_string(sums.at(c).passive));
        passive_rank.push_back(std::to_string(ranks.passive.at(c)));
    }
    for (auto *row : {&passive, &passive_rank}) {
        row->emplace_back();
        row->emplace_back();
        out += csv::format_row(*row);
    }
    return out;
}

std::string export_report_csv(const FactorScores &scores, int decimals) {
    std::string out = csv::format_row({"id", "category", "name", "active_sum", "active_norm", "active_rank",
                                       "passive_sum", "passive_norm", "passive_rank", "region", "key"});
    for (const auto &s : scores) {
        out += csv::format_row({
            std::to_string(s.factor.id),
            std::string(to_string(s.factor.category)),
            s.factor.display_name,
            std::to_string(s.active_sum),
            norm_text(s.active_norm, decimals),
            std::to_string(s.active_rank),
            std::to_string(s.passive_sum),
            norm_text(s.passive_norm, decimals),
            std::to_string(s.passive_rank),
            std::string(to_string(s.region)),
            s.key ? "true" : "false",
        });
    }
    return out;
}

double PlotLayout::x_of(double passive_norm) const {
    const double plot_w = width - margin_left - margin_right;
    return margin_left + plot_w * passive_norm / 100.0;
}

double PlotLayout::y_of(double active_norm) const {
    const double plot_h = height - margin_top - margin_bottom;
    return margin_top + plot_h * (1.0 - active_norm / 100.0);
}

std::string render_scatter_svg(const FactorScores &scores, const AnalysisConfig &cfg, const PlotLayout &layout) {
    using fmt::format;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += format("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
                  "viewBox=\"0 0 {} {}\">\n",
                  layout.width, layout.height, layout.width, layout.height);
    out += format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", layout.width, layout.height);

    const double x0 = layout.x_of(0);
    const double x1 = layout.x_of(100);
    const double y0 = layout.y_of(0);
    const double y1 = layout.y_of(100);

    out += "<g class=\"axes\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int t = 0; t <= 100; t += 10) {
        const double x = layout.x_of(t);
        const double y = layout.y_of(t);
        out += format("<line class=\"grid\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#e0e0e0\"/>\n",
                      x, y0, x, y1);
        out += format("<line class=\"grid\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#e0e0e0\"/>\n",
                      x0, y, x1, y);
        out += format("<line class=\"tick\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                      x, y0, x, y0 + 5);
        out += format("<line class=\"tick\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                      x0 - 5, y, x0, y);
        out += format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", x, y0 + 18, t);
        out += format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", x0 - 8, y + 4, t);
    }
    out += format("<line class=\"axis\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                  x0, y0, x1, y0);
    out += format("<line class=\"axis\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                  x0, y0, x0, y1);
    out += format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">passive sum (normalized)</text>\n",
                  (x0 + x1) / 2, y0 + 45);
    out += format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 {:.2f} {:.2f})\">"
                  "active sum (normalized)</text>\n",
                  x0 - 45, (y0 + y1) / 2, x0 - 45, (y0 + y1) / 2);
    out += "</g>\n";

    // Region boundaries: active = ratio * passive, clipped to the plot square.
    for (const double ratio : {cfg.dominant_ratio, cfg.reactive_ratio}) {
        const double passive_end = ratio >= 1.0 ? 100.0 / ratio : 100.0;
        const double active_end = ratio >= 1.0 ? 100.0 : 100.0 * ratio;
        out += format("<line class=\"boundary\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" "
                      "stroke=\"#888888\" stroke-dasharray=\"6 4\"/>\n",
                      x0, y0, layout.x_of(passive_end), layout.y_of(active_end));
    }

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a].factor.id < scores[b].factor.id; });

    out += "<g class=\"factors\" font-family=\"sans-serif\" font-size=\"10\">\n";
    for (const std::size_t i : order) {
        const auto &s = scores[i];
        const double x = layout.x_of(s.passive_norm);
        const double y = layout.y_of(s.active_norm);
        const std::string stroke = s.key ? "stroke=\"black\" stroke-width=\"2\"" : "stroke=\"#333333\" stroke-width=\"1\"";
        out += format("<g class=\"factor\" data-id=\"{}\" data-region=\"{}\">\n", s.factor.id, to_string(s.region));
        switch (s.region) {
        case Region::Dominant:
            out += format("<polygon class=\"marker\" points=\"{:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f}\" "
                          "fill=\"#d62728\" {}/>\n",
                          x, y - 6, x - 5.5, y + 4, x + 5.5, y + 4, stroke);
            break;
        case Region::Dynamic:
            out += format("<circle class=\"marker\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\" fill=\"#1f77b4\" {}/>\n", x, y,
                          stroke);
            break;
        case Region::Reactive:
            out += format("<rect class=\"marker\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"10\" height=\"10\" "
                          "fill=\"#2ca02c\" {}/>\n",
                          x - 5, y - 5, stroke);
            break;
        case Region::Isolated:
            out += format("<circle class=\"marker\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\" fill=\"none\" {}/>\n", x, y,
                          stroke);
            break;
        }
        out += format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", x + layout.label_offset,
                      y - layout.label_offset, s.factor.id);
        out += format("<title>{}</title>\n", xml_escape(fmt::format("{}: {}", s.factor.id, s.factor.display_name)));
        out += "</g>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string export_dot(const RelationshipMatrix &m) {
    std::string out = "digraph failure_network {\n";
    for (const auto &f : m.factors()) {
        out += fmt::format("  n{} [label=\"{}: {}\", shape={}];\n", f.id, f.id, dot_escape(f.display_name),
                           dot_shape(f.category));
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (const Count n = m.count(r, c); n != 0) {
                out += fmt::format("  n{} -> n{} [label=\"{}\", penwidth={:.1f}];\n", m.factors()[r].id,
                                   m.factors()[c].id, n, static_cast<double>(n));
            }
        }
    }
    out += "}\n";
    return out;
}

}  // namespace keyfactor
