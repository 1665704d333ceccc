#include "keyfactor/chain_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include <fmt/format.h>

namespace keyfactor {

namespace {

constexpr std::string_view kSectionBreak = "---";

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t column_of(std::string_view line, std::size_t byte_pos) {
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte_pos && i < line.size(); ++i) {
        if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++col;
    }
    return col;
}

struct PendingStep {
    ChainStep step;
    std::size_t line = 0;
};

struct Section {
    std::size_t start_line = 0;
    std::optional<std::string> alert;
    std::optional<std::string> case_label;
    std::size_t alert_line = 0;
    std::vector<PendingStep> steps;
    bool has_error = false;

    bool empty() const { return start_line == 0; }
};

class DocumentParser {
public:
    ParseResult run(std::string_view source) {
        if (source.substr(0, 3) == "\xEF\xBB\xBF") source.remove_prefix(3);

        std::size_t line_no = 0;
        while (!source.empty() || line_no == 0) {
            ++line_no;
            const auto nl = source.find('\n');
            std::string_view line = source.substr(0, nl);
            source = nl == std::string_view::npos ? std::string_view{} : source.substr(nl + 1);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            handle_line(line, line_no);
            if (nl == std::string_view::npos) break;
        }
        finish_section();

        std::stable_sort(result_.diagnostics.begin(), result_.diagnostics.end(),
                         [](const Diagnostic &a, const Diagnostic &b) {
                             return a.line != b.line ? a.line < b.line : a.column < b.column;
                         });
        return std::move(result_);
    }

private:
    void error(std::size_t line, std::size_t col, std::string msg) {
        section_.has_error = true;
        result_.diagnostics.push_back({Severity::Error, line, col, std::move(msg)});
    }

    void warning(std::size_t line, std::size_t col, std::string msg) {
        result_.diagnostics.push_back({Severity::Warning, line, col, std::move(msg)});
    }

    void handle_line(std::string_view line, std::size_t line_no) {
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') return;
        if (content == kSectionBreak) {
            finish_section();
            return;
        }
        if (section_.empty()) section_.start_line = line_no;

        std::size_t pos = 0;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        const std::size_t ident_begin = pos;
        if (pos < line.size() && (std::isalpha(static_cast<unsigned char>(line[pos])) || line[pos] == '_')) {
            while (pos < line.size() && (std::isalnum(static_cast<unsigned char>(line[pos])) ||
                                         line[pos] == '_' || line[pos] == '-')) {
                ++pos;
            }
        }
        if (pos == ident_begin) {
            error(line_no, column_of(line, ident_begin), "malformed line: expected a header or a step");
            return;
        }
        const std::string_view ident = line.substr(ident_begin, pos - ident_begin);

        if (pos < line.size() && line[pos] == ':') {
            handle_header(line, line_no, ident, ident_begin, trim(line.substr(pos + 1)));
        } else {
            handle_step(line, line_no, ident, ident_begin, pos);
        }
    }

    void handle_header(std::string_view line, std::size_t line_no, std::string_view key,
                       std::size_t key_pos, std::string_view value) {
        const std::size_t col = column_of(line, key_pos);
        std::optional<std::string> *slot = nullptr;
        if (key == "alert") {
            slot = &section_.alert;
        } else if (key == "case") {
            slot = &section_.case_label;
        } else {
            error(line_no, col, fmt::format("unknown header '{}'", key));
            return;
        }
        if (!section_.steps.empty()) {
            error(line_no, col, fmt::format("header '{}' appears after the first step", key));
            return;
        }
        if (value.empty()) {
            error(line_no, col, fmt::format("header '{}' has an empty value", key));
            return;
        }
        if (slot->has_value()) {
            warning(line_no, col, fmt::format("duplicate '{}' header; the last value wins", key));
        }
        *slot = std::string(value);
        if (key == "alert") section_.alert_line = line_no;
    }

    void handle_step(std::string_view line, std::size_t line_no, std::string_view keyword,
                     std::size_t keyword_pos, std::size_t pos) {
        const auto category = category_from_keyword(keyword);
        if (!category) {
            error(line_no, column_of(line, keyword_pos), fmt::format("unknown category '{}'", keyword));
            return;
        }
        while (pos < line.size() && is_blank(line[pos])) ++pos;
        if (pos >= line.size() || line[pos] != '"') {
            error(line_no, column_of(line, pos),
                  fmt::format("expected a quoted name after '{}'", keyword));
            return;
        }
        const std::size_t open_quote = pos++;
        std::string name;
        bool closed = false;
        while (pos < line.size()) {
            const char c = line[pos];
            if (c == '"') {
                closed = true;
                ++pos;
                break;
            }
            if (c == '\\') {
                if (pos + 1 >= line.size()) break;
                const char e = line[pos + 1];
                switch (e) {
                case '"': name.push_back('"'); break;
                case '\\': name.push_back('\\'); break;
                case 'n': name.push_back('\n'); break;
                case 't': name.push_back('\t'); break;
                case 'r': name.push_back('\r'); break;
                default:
                    error(line_no, column_of(line, pos), fmt::format("unknown escape '\\{}'", e));
                    return;
                }
                pos += 2;
                continue;
            }
            name.push_back(c);
            ++pos;
        }
        if (!closed) {
            error(line_no, column_of(line, open_quote), "unterminated quoted name");
            return;
        }
        while (pos < line.size() && is_blank(line[pos])) ++pos;
        if (pos < line.size() && line[pos] != '#') {
            error(line_no, column_of(line, pos), "unexpected text after the quoted name");
            return;
        }
        section_.steps.push_back({ChainStep{*category, std::move(name)}, line_no});
    }

    void finish_section() {
        if (section_.empty()) {
            section_ = Section{};
            return;
        }
        if (!section_.alert) error(section_.start_line, 1, "missing 'alert' header");
        if (!section_.case_label) error(section_.start_line, 1, "missing 'case' header");

        if (!section_.has_error) {
            FailureChain chain;
            chain.source_alert = *section_.alert;
            chain.case_label = *section_.case_label;
            chain.steps.reserve(section_.steps.size());
            for (const auto &s : section_.steps) chain.steps.push_back(s.step);

            for (const auto &v : validate_chain(chain)) {
                const std::size_t line =
                    v.step == 0 ? section_.start_line : section_.steps[v.step - 1].line;
                error(line, 1, fmt::format("{}: {}", to_string(v.rule), v.message));
            }
            if (!section_.has_error) result_.chains.push_back(std::move(chain));
        }
        section_ = Section{};
    }

    ParseResult result_;
    Section section_;
};

bool header_writable(std::string_view value) {
    return !value.empty() && trim(value) == value &&
           value.find_first_of("\r\n") == std::string_view::npos;
}

}  // namespace

std::string_view to_string(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

bool ParseResult::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic &d) { return d.severity == Severity::Error; });
}

bool ParseResult::has_warnings() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic &d) { return d.severity == Severity::Warning; });
}

ParseResult parse_document(std::string_view source) { return DocumentParser{}.run(source); }

SerializeError::SerializeError(std::size_t chain_index, std::vector<Violation> violations)
    : std::runtime_error([&] {
          std::string msg = fmt::format("cannot serialize chain {}:", chain_index + 1);
          for (const auto &v : violations) msg += fmt::format(" [{}: {}]", to_string(v.rule), v.message);
          return msg;
      }()),
      chain_index_(chain_index),
      violations_(std::move(violations)) {}

std::string quote_name(std::string_view name) {
    std::string out = "\"";
    for (char c : name) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string serialize_document(const ChainSet &chains) {
    std::string out;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const auto &chain = chains[i];
        auto violations = validate_chain(chain);
        if (!header_writable(chain.source_alert)) {
            violations.insert(violations.begin(), Violation{ViolationRule::MalformedHeader, 0,
                                                            "alert must be a non-empty single trimmed line"});
        }
        if (!header_writable(chain.case_label)) {
            violations.insert(violations.begin(), Violation{ViolationRule::MalformedHeader, 0,
                                                            "case must be a non-empty single trimmed line"});
        }
        if (!violations.empty()) throw SerializeError(i, std::move(violations));

        if (i > 0) out += "---\n";
        out += fmt::format("alert: {}\ncase: {}\n", chain.source_alert, chain.case_label);
        for (const auto &step : chain.steps) {
            out += fmt::format("{} {}\n", dsl_keyword(step.category), quote_name(step.name));
        }
    }
    return out;
}

}  // namespace keyfactor
