#include "augloop/gen_filter.hpp"

#include <utility>

#include "augloop/rouge.hpp"
#include "augloop/teacher_parse.hpp"
#include "augloop/text.hpp"

namespace augloop {

GenerationFilter::GenerationFilter(Task task, double rouge_threshold)
    : task_(task), threshold_(rouge_threshold) {}

void GenerationFilter::seed_pool(const Dataset& existing) {
  for (const auto& ex : existing) add_to_pool(ex.question);
}

void GenerationFilter::add_to_pool(const std::string& question) {
  pool_tokens_.push_back(word_tokens(question));
}

std::vector<Example> GenerationFilter::filter(std::vector<Example> candidates,
                                              FilterStats* stats) {
  FilterStats local;
  FilterStats& s = stats ? *stats : local;
  std::vector<Example> accepted;
  for (auto& cand : candidates) {
    ++s.candidates;
    if (!validate_format(task_, cand)) {
      ++s.format_rejected;
      continue;
    }
    std::vector<std::string> tokens = word_tokens(cand.question);
    double best = 0.0;
    for (const auto& pooled : pool_tokens_) {
      best = std::max(best, rouge_l(tokens, pooled));
      if (best > threshold_) break;
    }
    if (best > threshold_) {
      ++s.near_duplicate_rejected;
      continue;
    }
    pool_tokens_.push_back(std::move(tokens));
    accepted.push_back(std::move(cand));
    ++s.accepted;
  }
  return accepted;
}

}  // namespace augloop
