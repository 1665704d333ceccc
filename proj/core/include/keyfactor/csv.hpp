#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace keyfactor::csv {

using Row = std::vector<std::string>;

class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string &what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Quotes the field when it holds a comma, quote, CR or LF.
std::string escape_field(std::string_view field);

/// Comma-joined, LF-terminated.
std::string format_row(const Row &row);

/// RFC 4180 reader. Accepts LF or CRLF; a trailing newline does not add a row.
std::vector<Row> parse(std::string_view text);

}  // namespace keyfactor::csv
