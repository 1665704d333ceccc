#include "keyfactor/sums_csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>

#include <fmt/format.h>

#include "keyfactor/csv.hpp"

namespace keyfactor {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

template <typename T>
bool parse_unsigned(std::string_view text, T &out) {
    text = strip(text);
    if (text.empty()) return false;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

SumsTable read_sums_csv(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<csv::Row> rows;
    try {
        rows = csv::parse(text);
    } catch (const csv::CsvError &e) {
        throw SumsFormatError(e.what());
    }
    if (rows.empty()) throw SumsFormatError("sums file is empty; expected a header row");

    constexpr std::array<std::string_view, 5> kColumns = {"id", "category", "name", "active_sum",
                                                          "passive_sum"};
    std::array<std::size_t, 5> col{};
    for (std::size_t k = 0; k < kColumns.size(); ++k) {
        const auto &header = rows.front();
        const auto it = std::find_if(header.begin(), header.end(),
                                     [&](const std::string &h) { return strip(h) == kColumns[k]; });
        if (it == header.end()) throw SumsFormatError(fmt::format("missing column '{}'", kColumns[k]));
        col[k] = static_cast<std::size_t>(it - header.begin());
    }
    const std::size_t needed = *std::max_element(col.begin(), col.end()) + 1;

    SumsTable table;
    std::set<std::size_t> ids;
    std::set<FactorKey> keys;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto &row = rows[r];
        if (row.size() == 1 && strip(row[0]).empty()) continue;
        const std::size_t line = r + 1;
        if (row.size() < needed) {
            throw SumsFormatError(fmt::format("row {}: expected at least {} fields, got {}", line, needed, row.size()));
        }
        std::size_t id = 0;
        if (!parse_unsigned(row[col[0]], id) || id == 0) {
            throw SumsContentError(fmt::format("row {}: id '{}' is not a positive integer", line, row[col[0]]));
        }
        const auto category = parse_category(strip(row[col[1]]));
        if (!category) {
            throw SumsContentError(fmt::format("row {}: unknown category '{}'", line, row[col[1]]));
        }
        Factor factor;
        try {
            factor = make_factor(*category, strip(row[col[2]]), id);
        } catch (const EmptyNameError &) {
            throw SumsContentError(fmt::format("row {}: factor name is empty", line));
        }
        FactorSums entry{factor, 0, 0};
        if (!parse_unsigned(row[col[3]], entry.active)) {
            throw SumsContentError(fmt::format("row {}: active_sum '{}' is not a non-negative integer", line, row[col[3]]));
        }
        if (!parse_unsigned(row[col[4]], entry.passive)) {
            throw SumsContentError(fmt::format("row {}: passive_sum '{}' is not a non-negative integer", line, row[col[4]]));
        }
        if (!ids.insert(id).second) throw SumsContentError(fmt::format("row {}: duplicate id {}", line, id));
        if (!keys.insert(factor.key()).second) {
            throw SumsContentError(fmt::format("row {}: duplicate factor '{}'", line, factor.label()));
        }
        table.push_back(std::move(entry));
    }
    std::sort(table.begin(), table.end(),
              [](const FactorSums &a, const FactorSums &b) { return a.factor.id < b.factor.id; });
    return table;
}

}  // namespace keyfactor
