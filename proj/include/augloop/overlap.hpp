#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "augloop/dataset.hpp"
#include "augloop/types.hpp"

namespace augloop {

/// Word-overlap decontamination metric. An example is reduced to the set of
/// its word n-grams after stop-word and punctuation removal; the overlap of
/// a pair is |common n-grams| / |n-grams of the longer example|, in percent.
/// n = 1 gives plain word overlap.

std::vector<std::string> overlap_ngrams(std::string_view text, int n);

/// Pairwise overlap percentage in [0, 100]. Defined as 0 when either side
/// has no n-grams left after cleanup.
double overlap_pct(std::string_view a, std::string_view b, int n = 1);

struct OverlapStats {
  double average = 0.0;    // mean per-example overlap (%)
  double pct_above = 0.0;  // share of examples above `threshold` (%)
  double max = 0.0;        // maximum per-example overlap (%)
  int count_at_max = 0;    // number of examples at that maximum
  std::vector<double> per_example;
};

/// For each synthetic example, its overlap is the max pairwise overlap
/// against the whole reference corpus; the stats summarize those maxima.
OverlapStats overlap_report(const Dataset& synthetic, const Dataset& reference,
                            int n = 1, double threshold = 66.0);

}  // namespace augloop
