#include "keyfactor/model.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

namespace keyfactor {

namespace {

struct CategoryNames {
    FactorCategory category;
    std::string_view label;
    std::string_view keyword;
};

constexpr std::array<CategoryNames, 7> kCategoryNames = {{
    {FactorCategory::Component, "Component", "component"},
    {FactorCategory::Function, "Function", "function"},
    {FactorCategory::ControlFactor, "ControlFactor", "control"},
    {FactorCategory::NoiseFactor, "NoiseFactor", "noise"},
    {FactorCategory::Action, "Action", "action"},
    {FactorCategory::Effect, "Effect", "effect"},
    {FactorCategory::Harm, "Harm", "harm"},
}};

const CategoryNames &names_of(FactorCategory category) {
    return kCategoryNames[static_cast<std::size_t>(category)];
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::string_view to_string(FactorCategory category) { return names_of(category).label; }

std::string_view dsl_keyword(FactorCategory category) { return names_of(category).keyword; }

std::optional<FactorCategory> category_from_keyword(std::string_view keyword) {
    for (const auto &entry : kCategoryNames) {
        if (entry.keyword == keyword) return entry.category;
    }
    return std::nullopt;
}

std::optional<FactorCategory> parse_category(std::string_view text) {
    for (const auto &entry : kCategoryNames) {
        if (iequals(entry.keyword, text) || iequals(entry.label, text)) return entry.category;
    }
    return std::nullopt;
}

EmptyNameError::EmptyNameError(const std::string &raw)
    : std::invalid_argument(fmt::format("factor name '{}' is empty after normalization", raw)) {}

std::string normalize_name(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        // Bytes >= 0x80 (UTF-8 sequences) pass through unchanged.
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (out.empty()) throw EmptyNameError(std::string(raw));
    return out;
}

std::string Factor::label() const {
    return fmt::format("{}:{}", to_string(category), display_name);
}

Factor make_factor(FactorCategory category, std::string_view display_name, std::size_t id) {
    return Factor{category, std::string(display_name), normalize_name(display_name), id};
}

std::string_view to_string(ViolationRule rule) {
    switch (rule) {
    case ViolationRule::TooShort: return "TooShort";
    case ViolationRule::EmptyName: return "EmptyName";
    case ViolationRule::SelfTransition: return "SelfTransition";
    case ViolationRule::HarmNotTerminal: return "HarmNotTerminal";
    case ViolationRule::MissingHarm: return "MissingHarm";
    case ViolationRule::MalformedHeader: return "MalformedHeader";
    }
    return "Unknown";
}

std::vector<Violation> validate_chain(const FailureChain &chain) {
    std::vector<Violation> out;
    const auto &steps = chain.steps;

    if (steps.size() < 2) {
        out.push_back({ViolationRule::TooShort, 0,
                       fmt::format("chain has {} step(s); at least 2 are required", steps.size())});
    }

    std::vector<std::optional<std::string>> keys(steps.size());
    bool has_harm = false;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::size_t step_no = i + 1;
        try {
            keys[i] = normalize_name(steps[i].name);
        } catch (const EmptyNameError &) {
            out.push_back({ViolationRule::EmptyName, step_no, "step name is empty"});
        }
        if (i > 0 && keys[i] && keys[i - 1] && steps[i].category == steps[i - 1].category &&
            *keys[i] == *keys[i - 1]) {
            out.push_back({ViolationRule::SelfTransition, step_no,
                           fmt::format("step repeats factor '{}' of the previous step", *keys[i])});
        }
        if (steps[i].category == FactorCategory::Harm) {
            has_harm = true;
            if (step_no != steps.size()) {
                out.push_back({ViolationRule::HarmNotTerminal, step_no,
                               fmt::format("harm '{}' is followed by further steps", steps[i].name)});
            }
        }
    }
    if (!steps.empty() && !has_harm) {
        out.push_back({ViolationRule::MissingHarm, steps.size(), "chain does not end in a harm"});
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const Violation &a, const Violation &b) { return a.step < b.step; });
    return out;
}

ChainValidationError::ChainValidationError(std::size_t chain_index, std::vector<Violation> violations)
    : std::runtime_error([&] {
          std::string msg = fmt::format("chain {} is invalid:", chain_index + 1);
          for (const auto &v : violations) {
              msg += fmt::format(" [{} at step {}: {}]", to_string(v.rule), v.step, v.message);
          }
          return msg;
      }()),
      chain_index_(chain_index),
      violations_(std::move(violations)) {}

}  // namespace keyfactor
