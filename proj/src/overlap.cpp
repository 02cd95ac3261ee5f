#include "augloop/overlap.hpp"

#include <algorithm>
#include <unordered_set>

#include "augloop/text.hpp"

namespace augloop {

namespace {

std::unordered_set<std::string> ngram_set(std::string_view text, int n) {
  auto grams = overlap_ngrams(text, n);
  return {grams.begin(), grams.end()};
}

double set_overlap_pct(const std::unordered_set<std::string>& a,
                       const std::unordered_set<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  const auto& smaller = a.size() <= b.size() ? a : b;
  const auto& larger = a.size() <= b.size() ? b : a;
  size_t common = 0;
  for (const auto& g : smaller) {
    if (larger.count(g)) ++common;
  }
  return 100.0 * static_cast<double>(common) /
         static_cast<double>(larger.size());
}

}  // namespace

std::vector<std::string> overlap_ngrams(std::string_view text, int n) {
  auto tokens = content_tokens(text);
  if (n <= 1) return tokens;
  std::vector<std::string> grams;
  if (tokens.size() < static_cast<size_t>(n)) return grams;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string g = tokens[i];
    for (int k = 1; k < n; ++k) {
      g += ' ';
      g += tokens[i + k];
    }
    grams.push_back(std::move(g));
  }
  return grams;
}

double overlap_pct(std::string_view a, std::string_view b, int n) {
  return set_overlap_pct(ngram_set(a, n), ngram_set(b, n));
}

OverlapStats overlap_report(const Dataset& synthetic, const Dataset& reference,
                            int n, double threshold) {
  OverlapStats stats;
  if (synthetic.empty()) return stats;

  std::vector<std::unordered_set<std::string>> ref_sets;
  ref_sets.reserve(reference.size());
  for (const auto& ex : reference) {
    ref_sets.push_back(ngram_set(ex.question, n));
  }

  double sum = 0.0;
  size_t above = 0;
  for (const auto& ex : synthetic) {
    auto syn_set = ngram_set(ex.question, n);
    double best = 0.0;
    for (const auto& ref : ref_sets) {
      best = std::max(best, set_overlap_pct(syn_set, ref));
    }
    stats.per_example.push_back(best);
    sum += best;
    if (best > threshold) ++above;
  }
  stats.average = sum / static_cast<double>(synthetic.size());
  stats.pct_above =
      100.0 * static_cast<double>(above) / static_cast<double>(synthetic.size());
  stats.max = *std::max_element(stats.per_example.begin(),
                                stats.per_example.end());
  stats.count_at_max = static_cast<int>(
      std::count(stats.per_example.begin(), stats.per_example.end(), stats.max));
  return stats;
}

}  // namespace augloop
