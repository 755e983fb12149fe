#pragma once

// Position-aware scanners shared by the literal parsers and the ladder DSL.

#include "xsb/exponent.hpp"

#include <cstddef>
#include <string_view>

namespace xsb::detail {

void skip_blanks(std::string_view text, std::size_t& pos);

/// Scans one exponent starting at `pos` and leaves `pos` after it. Column
/// numbers in the thrown ParseError are `column_base + pos`.
Exponent scan_exponent(std::string_view text, std::size_t& pos,
                       std::size_t line = 1, std::size_t column_base = 1);

/// True when the exponent grammar can start at `pos`.
bool exponent_starts(std::string_view text, std::size_t pos);

} // namespace xsb::detail

#include "xsb/space.hpp"

namespace xsb::detail {

Space scan_space(std::string_view text, std::size_t& pos, std::size_t line = 1,
                 std::size_t column_base = 1);

GoalSpace scan_goal_space(std::string_view text, std::size_t& pos, std::size_t line = 1,
                          std::size_t column_base = 1);

} // namespace xsb::detail
