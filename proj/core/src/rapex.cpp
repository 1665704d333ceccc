#include "keyfactor/rapex.hpp"

#include <cctype>
#include <set>
#include <utility>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "keyfactor/chain_dsl.hpp"

namespace keyfactor {

namespace {

constexpr std::size_t kDocumentLevel = static_cast<std::size_t>(-1);
constexpr std::string_view kUnspecifiedCase = "unspecified";

std::string trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

/// Collapses any whitespace (including newlines) so the value fits on one header line.
std::string single_line(std::string_view s) {
    std::string out;
    bool space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = !out.empty();
            continue;
        }
        if (space) out.push_back(' ');
        space = false;
        out.push_back(c);
    }
    return out;
}

std::string file_stem(std::string_view text) {
    std::string out;
    bool dash = false;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) {
            if (dash && !out.empty()) out.push_back('-');
            dash = false;
            out.push_back(static_cast<char>(std::tolower(u)));
        } else {
            dash = true;
        }
    }
    return out.empty() ? std::string("x") : out;
}

std::vector<std::string> split_risks(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',' || text[i] == ';') {
            auto part = trimmed(text.substr(start, i - start));
            if (!part.empty()) out.push_back(std::move(part));
            start = i + 1;
        }
    }
    return out;
}

std::string optional_string(const nlohmann::json &record, const std::string &field, std::size_t index) {
    const auto it = record.find(field);
    if (it == record.end() || it->is_null()) return {};
    if (!it->is_string()) {
        throw AlertFormatError(index, fmt::format("field '{}' must be a string", field));
    }
    return it->get<std::string>();
}

}  // namespace

AlertFormatError::AlertFormatError(std::size_t record_index, const std::string &what)
    : std::runtime_error(record_index == kDocumentLevel
                             ? what
                             : fmt::format("record {}: {}", record_index, what)),
      record_index_(record_index) {}

std::vector<AlertRecord> read_alert_records(std::string_view json_text, const AlertFieldMap &fields) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw AlertFormatError(kDocumentLevel, fmt::format("alert file is not valid JSON: {}", e.what()));
    }
    if (!doc.is_array()) throw AlertFormatError(kDocumentLevel, "alert file must hold a JSON array of records");

    std::vector<AlertRecord> records;
    records.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto &entry = doc[i];
        if (!entry.is_object()) throw AlertFormatError(i, "record is not an object");

        AlertRecord record;
        record.alert_number = trimmed(optional_string(entry, fields.alert_number, i));
        if (record.alert_number.empty()) {
            throw AlertFormatError(i, fmt::format("missing or empty '{}'", fields.alert_number));
        }
        record.product = optional_string(entry, fields.product, i);
        record.description = optional_string(entry, fields.description, i);

        if (const auto risk = entry.find(fields.risk); risk != entry.end() && !risk->is_null()) {
            if (risk->is_string()) {
                record.risk_types = split_risks(risk->get<std::string>());
            } else if (risk->is_array()) {
                for (const auto &r : *risk) {
                    if (!r.is_string()) {
                        throw AlertFormatError(i, fmt::format("'{}' entries must be strings", fields.risk));
                    }
                    if (auto t = trimmed(r.get<std::string>()); !t.empty()) record.risk_types.push_back(std::move(t));
                }
            } else {
                throw AlertFormatError(i, fmt::format("'{}' must be a string or an array of strings", fields.risk));
            }
        }
        records.push_back(std::move(record));
    }
    return records;
}

ImportResult import_rapex(const std::vector<AlertRecord> &records) {
    ImportResult result;
    std::set<std::pair<std::string, std::string>> seen;
    std::set<std::string> used_names;

    for (const auto &record : records) {
        const std::string alert = single_line(record.alert_number);
        std::vector<std::string> cases;
        for (const auto &risk : record.risk_types) {
            if (auto r = single_line(risk); !r.empty()) cases.push_back(std::move(r));
        }
        const bool unspecified = cases.empty();
        if (unspecified) cases.emplace_back(kUnspecifiedCase);

        for (const auto &case_label : cases) {
            if (!seen.emplace(alert, case_label).second) {
                result.warnings.push_back(
                    fmt::format("duplicate alert/risk pair '{}' / '{}' skipped", alert, case_label));
                continue;
            }

            std::string doc;
            doc += fmt::format("# Skeleton for alert {}", alert);
            if (const auto product = single_line(record.product); !product.empty()) {
                doc += fmt::format(" ({})", product);
            }
            doc += '\n';
            std::string_view description = record.description;
            while (!description.empty()) {
                const auto nl = description.find('\n');
                auto line = trimmed(description.substr(0, nl));
                doc += line.empty() ? "#\n" : fmt::format("# {}\n", line);
                description = nl == std::string_view::npos ? std::string_view{} : description.substr(nl + 1);
            }
            if (unspecified) {
                doc += "# WARNING: the alert names no risk type; set the case and add a terminal harm step.\n";
            }
            doc += "# Author the steps leading to the harm above it.\n";
            doc += fmt::format("alert: {}\ncase: {}\n", alert, case_label);
            if (!unspecified) doc += fmt::format("harm {}\n", quote_name(case_label));

            std::string name = fmt::format("{}_{}", file_stem(alert), file_stem(case_label));
            for (int n = 2; !used_names.insert(name).second; ++n) {
                name = fmt::format("{}_{}_{}", file_stem(alert), file_stem(case_label), n);
            }
            result.documents.push_back({name + ".chains", std::move(doc)});
        }
    }
    return result;
}

}  // namespace keyfactor
