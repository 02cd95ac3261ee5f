#pragma once

#include <string>

#include "augloop/chat.hpp"
#include "augloop/types.hpp"

namespace augloop {

/// Prompt rendering for both sides of the pipeline: the prompts the student
/// model is fine-tuned and evaluated on, and the chat exchange sent to the
/// teacher model when regenerating a missed example.

/// The input the student sees (problem statement, classification scaffold
/// with the label list, masked judicial context with options, ...).
std::string student_prompt(Task task, const Example& ex);

/// The fine-tuning target for an example (rationale ending in "#### n",
/// option letter, or class label).
std::string student_completion(Task task, const Example& ex);

/// Task-specific system prompt for the teacher model.
const std::string& teacher_system_prompt(Task task);

/// The user turn asking the teacher for `k` new examples modeled on a
/// missed one.
std::string teacher_request(Task task, const Example& missed, int k);

/// Fixed one-shot exchange bootstrapping the teacher's output format.
const Example& teacher_icl_example(Task task);
const std::string& teacher_icl_response(Task task);

/// Full message list: system, in-context user/assistant pair, then the
/// request for `missed`.
ChatMessages build_teacher_messages(Task task, const Example& missed, int k);

}  // namespace augloop
