#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "augloop/types.hpp"

namespace augloop {

/// Pulls candidate examples out of a teacher completion. Completions follow
/// the per-task layout requested by the system prompt ("1. Question: ...",
/// "Answer: ...", "#### n" and friends) but routinely carry a conversational
/// preamble and enumeration, so parsing is marker-driven: anything before
/// the first item marker is skipped, and one completion may contain several
/// numbered items.
///
/// Parsing is purely structural. Content rules (a parseable "#### n" answer,
/// the <HOLDING> mask, five options, a label from the task's set) are
/// enforced by validate_format below; the ids/origin metadata are left for
/// the caller to fill in.
std::vector<Example> parse_generations(Task task, std::string_view completion);

/// Format filter: checks the task's structural requirements and, for
/// classification tasks, canonicalizes the label's casing in place.
/// Returns false when the candidate must be discarded.
bool validate_format(Task task, Example& candidate);

}  // namespace augloop
