#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace keyfactor {

/// Parameter classes of a failure chain. Harm is the only terminal class.
/// Enumerator order is the presentation order used for matrix rows/columns.
enum class FactorCategory {
    Component,
    Function,
    ControlFactor,
    NoiseFactor,
    Action,
    Effect,
    Harm,
};

inline constexpr std::array<FactorCategory, 7> kAllCategories = {
    FactorCategory::Component,   FactorCategory::Function, FactorCategory::ControlFactor,
    FactorCategory::NoiseFactor, FactorCategory::Action,   FactorCategory::Effect,
    FactorCategory::Harm,
};

/// "Component", "ControlFactor", ... as used in reports and matrix labels.
std::string_view to_string(FactorCategory category);

/// Lower-case keyword of the chain notation ("component", "control", ...).
std::string_view dsl_keyword(FactorCategory category);

std::optional<FactorCategory> category_from_keyword(std::string_view keyword);

/// Accepts either spelling above, case-insensitively.
std::optional<FactorCategory> parse_category(std::string_view text);

class EmptyNameError : public std::invalid_argument {
public:
    explicit EmptyNameError(const std::string &raw);
};

/// Trim, collapse internal whitespace runs to one space, ASCII case-fold.
/// Throws EmptyNameError if nothing remains.
std::string normalize_name(std::string_view raw);

/// Identity of a factor: the same name under two categories is two factors.
struct FactorKey {
    FactorCategory category = FactorCategory::Component;
    std::string canonical;

    friend bool operator==(const FactorKey &, const FactorKey &) = default;
    friend auto operator<=>(const FactorKey &, const FactorKey &) = default;
};

struct Factor {
    FactorCategory category = FactorCategory::Component;
    std::string display_name;  // first-seen spelling
    std::string canonical_key;
    std::size_t id = 0;        // 1-based, assigned when a matrix is built

    FactorKey key() const { return {category, canonical_key}; }
    /// "<Category>:<display_name>"
    std::string label() const;

    friend bool operator==(const Factor &, const Factor &) = default;
};

Factor make_factor(FactorCategory category, std::string_view display_name, std::size_t id = 0);

struct ChainStep {
    FactorCategory category = FactorCategory::Component;
    std::string name;

    friend bool operator==(const ChainStep &, const ChainStep &) = default;
};

/// One documented failure case: a linear sequence of factor occurrences
/// that ends in exactly one harm.
struct FailureChain {
    std::string source_alert;
    std::string case_label;
    std::vector<ChainStep> steps;

    friend bool operator==(const FailureChain &, const FailureChain &) = default;
};

using ChainSet = std::vector<FailureChain>;

enum class ViolationRule {
    TooShort,         // fewer than two steps
    EmptyName,        // name normalizes to nothing
    SelfTransition,   // consecutive steps resolve to the same factor
    HarmNotTerminal,  // harm somewhere other than the last step
    MissingHarm,      // chain has no harm at all
    MalformedHeader,  // alert/case text not writable as a header line; serializer only
};

std::string_view to_string(ViolationRule rule);

struct Violation {
    ViolationRule rule = ViolationRule::TooShort;
    std::size_t step = 0;  // 1-based step index; 0 for whole-chain findings
    std::string message;

    friend bool operator==(const Violation &, const Violation &) = default;
};

/// Empty iff the chain satisfies every chain invariant. Sorted by step.
std::vector<Violation> validate_chain(const FailureChain &chain);

class ChainValidationError : public std::runtime_error {
public:
    ChainValidationError(std::size_t chain_index, std::vector<Violation> violations);

    std::size_t chain_index() const noexcept { return chain_index_; }
    const std::vector<Violation> &violations() const noexcept { return violations_; }

private:
    std::size_t chain_index_;
    std::vector<Violation> violations_;
};

}  // namespace keyfactor
