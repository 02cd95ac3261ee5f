#include "augloop/rouge.hpp"

#include <algorithm>

#include "augloop/text.hpp"

namespace augloop {

size_t lcs_length(const std::vector<std::string>& a,
                  const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0;
  // Two rolling rows keep the DP at O(min(|a|,|b|)) memory.
  const auto& shorter = a.size() <= b.size() ? a : b;
  const auto& longer = a.size() <= b.size() ? b : a;
  std::vector<size_t> prev(shorter.size() + 1, 0);
  std::vector<size_t> cur(shorter.size() + 1, 0);
  for (size_t i = 1; i <= longer.size(); ++i) {
    for (size_t j = 1; j <= shorter.size(); ++j) {
      if (longer[i - 1] == shorter[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[shorter.size()];
}

double rouge_l(const std::vector<std::string>& reference,
               const std::vector<std::string>& candidate) {
  if (reference.empty() || candidate.empty()) return 0.0;
  const double lcs = static_cast<double>(lcs_length(reference, candidate));
  if (lcs == 0.0) return 0.0;
  const double precision = lcs / static_cast<double>(candidate.size());
  const double recall = lcs / static_cast<double>(reference.size());
  return 2.0 * precision * recall / (precision + recall);
}

double rouge_l(std::string_view reference, std::string_view candidate) {
  return rouge_l(word_tokens(reference), word_tokens(candidate));
}

double max_rouge_l(const std::vector<std::vector<std::string>>& pool,
                   const std::vector<std::string>& candidate) {
  double best = 0.0;
  for (const auto& entry : pool) {
    best = std::max(best, rouge_l(entry, candidate));
  }
  return best;
}

}  // namespace augloop
