#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "keyfactor/matrix.hpp"

namespace keyfactor {

/// Structural problem: not CSV, or required columns missing.
class SumsFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A row that parses but carries unusable values.
class SumsContentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a published sums table. Required columns (any order, extras are
/// ignored): id, category, name, active_sum, passive_sum. Rows are returned
/// in ascending id order and keep their ids.
SumsTable read_sums_csv(std::string_view text);

}  // namespace keyfactor
