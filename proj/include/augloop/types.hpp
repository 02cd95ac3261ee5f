#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace augloop {

enum class Task { Gsm8k, CaseHold, Snips, Trec, Sst2 };

constexpr const char* kTaskNames[] = {"gsm8k", "casehold", "snips", "trec",
                                      "sst2"};

std::string task_name(Task task);
Task task_from_name(std::string_view name);  // throws on unknown name

/// Class labels for the classification tasks; empty for gsm8k/casehold.
const std::vector<std::string>& task_labels(Task task);

enum class Origin { Seed, Augmented };

/// One training/eval record. `question` holds the task input (math problem,
/// judicial context, transcript, question, or review); `answer` holds the
/// target (rationale ending in "#### n", option letter, or class label).
/// CaseHold additionally carries five candidate holdings in `options`.
struct Example {
  std::string id;
  std::string question;
  std::string answer;
  std::vector<std::string> options;
  Origin origin = Origin::Seed;
  int iteration = 0;
  std::string parent_id;  // seed example this was generated from, if any

  bool operator==(const Example&) const = default;
};

nlohmann::json example_to_json(const Example& ex);
Example example_from_json(const nlohmann::json& j);

}  // namespace augloop
