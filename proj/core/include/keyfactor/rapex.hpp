#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace keyfactor {

/// A safety-alert record as published by the EU Safety Gate (Rapex).
struct AlertRecord {
    std::string alert_number;
    std::string product;
    std::vector<std::string> risk_types;
    std::string description;

    friend bool operator==(const AlertRecord &, const AlertRecord &) = default;
};

/// Field names in the structured alert export. Export schemas vary, so each
/// name can be overridden.
struct AlertFieldMap {
    std::string alert_number = "alertNumber";
    std::string product = "product";
    std::string risk = "risk";
    std::string description = "description";
};

class AlertFormatError : public std::runtime_error {
public:
    /// record_index is 0-based; npos when the document itself is unusable.
    AlertFormatError(std::size_t record_index, const std::string &what);

    std::size_t record_index() const noexcept { return record_index_; }
    bool document_level() const noexcept { return record_index_ == static_cast<std::size_t>(-1); }

private:
    std::size_t record_index_;
};

/// Reads a JSON array of flat objects. The risk field may be a string
/// (split on ',' and ';') or an array of strings; product and description
/// are optional.
std::vector<AlertRecord> read_alert_records(std::string_view json_text, const AlertFieldMap &fields = {});

struct SkeletonDocument {
    std::string file_name;  // "<alert>_<risk>.chains", filesystem-safe
    std::string document;
};

struct ImportResult {
    std::vector<SkeletonDocument> documents;
    std::vector<std::string> warnings;
};

/// One skeleton per (alert, risk type) pair, holding the headers, the
/// description as comments and the terminal harm step. The analyst authors
/// the preceding steps.
ImportResult import_rapex(const std::vector<AlertRecord> &records);

}  // namespace keyfactor
