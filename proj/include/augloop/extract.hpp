#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "augloop/types.hpp"

namespace augloop {

/// Answer extraction for the exact-match harness.

/// Number after the last "####" marker ("#### 14" -> "14"). Commas, "$" and
/// surrounding whitespace are stripped; returns nullopt when no marker is
/// followed by a parseable number.
std::optional<std::string> extract_marked_number(std::string_view text);

/// First standalone choice letter A-E ("D", "Answer: D", "(d)" all give "D").
std::optional<std::string> extract_choice_letter(std::string_view text);

/// Numeric comparison of two extracted answer strings ("14" == "14.0",
/// "1,050" == "1050"). Falls back to string equality when unparseable.
bool numbers_equal(std::string_view a, std::string_view b);

/// Exact match between a model generation and the gold answer under the
/// task's extraction rule.
bool answers_match(Task task, std::string_view prediction,
                   std::string_view gold);

}  // namespace augloop
