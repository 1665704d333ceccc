#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "keyfactor/model.hpp"

namespace keyfactor {

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct Diagnostic {
    Severity severity = Severity::Error;
    std::size_t line = 1;    // 1-based
    std::size_t column = 1;  // 1-based, counted in code points
    std::string message;

    friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

struct ParseResult {
    ChainSet chains;
    std::vector<Diagnostic> diagnostics;

    bool has_errors() const;
    bool has_warnings() const;
};

// Chain document notation (.chains):
//
//   # comment
//   alert: A12/02261/23
//   case: burn
//   component "hair dryer"
//   control "power I [A]"
//   harm "burn"
//   ---
//   alert: ...
//
// Sections are separated by a line holding only `---`. Each section carries
// the `alert:` and `case:` headers followed by step lines
// `<keyword> "<name>"`. Names support the escapes \" \\ \n \t \r.
// A `#` opens a comment at the start of a line or after a step's closing quote.

/// Never throws on malformed input. Chains with any Error are dropped.
ParseResult parse_document(std::string_view source);

class SerializeError : public std::runtime_error {
public:
    SerializeError(std::size_t chain_index, std::vector<Violation> violations);

    std::size_t chain_index() const noexcept { return chain_index_; }
    const std::vector<Violation> &violations() const noexcept { return violations_; }

private:
    std::size_t chain_index_;
    std::vector<Violation> violations_;
};

/// Inverse of parse_document for valid chain sets. Throws SerializeError on
/// the first chain that fails validate_chain or whose headers cannot be
/// written on a single line.
std::string serialize_document(const ChainSet &chains);

/// Quoted, escaped form of a step name as it appears in a step line.
std::string quote_name(std::string_view name);

}  // namespace keyfactor
