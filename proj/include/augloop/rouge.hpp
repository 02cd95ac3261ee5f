#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace augloop {

/// Length of the longest common subsequence of two token sequences.
size_t lcs_length(const std::vector<std::string>& a,
                  const std::vector<std::string>& b);

/// ROUGE-L F-measure between two token sequences: the harmonic mean of
/// LCS-based precision and recall. Returns 0 when either side is empty.
double rouge_l(const std::vector<std::string>& reference,
               const std::vector<std::string>& candidate);

/// Convenience overload tokenizing with word_tokens().
double rouge_l(std::string_view reference, std::string_view candidate);

/// Max ROUGE-L of `candidate` against every entry of `pool`.
/// Returns 0 for an empty pool.
double max_rouge_l(const std::vector<std::vector<std::string>>& pool,
                   const std::vector<std::string>& candidate);

}  // namespace augloop
