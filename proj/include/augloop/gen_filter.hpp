#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "augloop/dataset.hpp"
#include "augloop/types.hpp"

namespace augloop {

/// Reject a candidate whose question scores above this ROUGE-L F1 against
/// anything already in the pool. High on purpose: only near-verbatim copies
/// are dropped, paraphrases stay.
inline constexpr double kDefaultRougeThreshold = 0.95;

struct FilterStats {
  size_t candidates = 0;
  size_t format_rejected = 0;
  size_t near_duplicate_rejected = 0;
  size_t accepted = 0;
};

/// Two-stage gate for teacher generations: structural/format validation
/// first, then a ROUGE-L near-duplicate check against everything seen so far
/// (the training pool plus generations already accepted this round, so a
/// batch cannot smuggle in two copies of the same rewrite).
class GenerationFilter {
 public:
  explicit GenerationFilter(Task task, double rouge_threshold = kDefaultRougeThreshold);

  /// Adds the questions of an existing dataset to the duplicate pool.
  void seed_pool(const Dataset& existing);

  /// Filters one batch of parsed candidates. Accepted examples are returned
  /// (with labels canonicalized by the format check) and their questions
  /// join the pool. Stats accumulate across calls when `stats` is reused.
  std::vector<Example> filter(std::vector<Example> candidates, FilterStats* stats = nullptr);

  size_t pool_size() const { return pool_tokens_.size(); }

 private:
  void add_to_pool(const std::string& question);

  Task task_;
  double threshold_;
  std::vector<std::vector<std::string>> pool_tokens_;
};

}  // namespace augloop
