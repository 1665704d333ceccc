#include "keyfactor/csv.hpp"

#include <fmt/format.h>

namespace keyfactor::csv {

CsvError::CsvError(std::size_t line, const std::string &what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

std::string escape_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_row(const Row &row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += escape_field(row[i]);
    }
    out.push_back('\n');
    return out;
}

std::vector<Row> parse(std::string_view text) {
    std::vector<Row> rows;
    Row row;
    std::string field;
    std::size_t line = 1;
    std::size_t i = 0;
    bool row_started = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_started = false;
    };

    while (i < text.size()) {
        const char c = text[i];
        if (c == '"' && field.empty()) {
            const std::size_t quote_line = line;
            ++i;
            bool closed = false;
            while (i < text.size()) {
                if (text[i] == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                        continue;
                    }
                    closed = true;
                    ++i;
                    break;
                }
                if (text[i] == '\n') ++line;
                field.push_back(text[i++]);
            }
            if (!closed) throw CsvError(quote_line, "unterminated quoted field");
            row_started = true;
            if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                throw CsvError(line, "unexpected character after closing quote");
            }
            continue;
        }
        if (c == ',') {
            end_field();
            row_started = true;
            ++i;
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            ++i;
        } else if (c == '\n') {
            end_row();
            ++line;
            ++i;
        } else {
            if (c == '"') throw CsvError(line, "quote inside an unquoted field");
            field.push_back(c);
            row_started = true;
            ++i;
        }
    }
    if (row_started || !field.empty()) end_row();
    return rows;
}

}  // namespace keyfactor::csv
