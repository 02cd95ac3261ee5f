#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "augloop/dataset.hpp"
#include "augloop/synonyms.hpp"
#include "augloop/types.hpp"

namespace augloop {

/// Word-level augmentation: synonym replacement plus random insertion, swap,
/// and deletion, each driven by a 10% rate by default.

/// Returns true for tokens that must never be altered, moved, or deleted.
using TokenGuard = std::function<bool(const std::string&)>;

/// Structural elements per task that the augmenter must leave intact
/// (numbers, "####" markers and "<<...>>" calculator annotations for math
/// problems; the <HOLDING> mask for holdings).
TokenGuard task_token_guard(Task task);

struct EdaParams {
  double alpha_sr = 0.1;  // fraction of words to synonym-replace
  double alpha_ri = 0.1;  // fraction of words to insert
  double alpha_rs = 0.1;  // fraction of words to swap
  double p_rd = 0.1;      // per-word deletion probability
  int n_aug = 4;          // variants per example
};

std::vector<std::string> synonym_replacement(std::vector<std::string> words,
                                             size_t n, const SynonymDict& dict,
                                             const TokenGuard& guard,
                                             std::mt19937_64& rng);

std::vector<std::string> random_insertion(std::vector<std::string> words,
                                          size_t n, const SynonymDict& dict,
                                          const TokenGuard& guard,
                                          std::mt19937_64& rng);

std::vector<std::string> random_swap(std::vector<std::string> words, size_t n,
                                     const TokenGuard& guard,
                                     std::mt19937_64& rng);

std::vector<std::string> random_deletion(const std::vector<std::string>& words,
                                         double p, const TokenGuard& guard,
                                         std::mt19937_64& rng);

/// n_aug augmented copies of `text`, cycling through the four operations.
std::vector<std::string> eda_variants(const std::string& text,
                                      const SynonymDict& dict,
                                      const TokenGuard& guard,
                                      const EdaParams& params,
                                      std::mt19937_64& rng);

/// EDA over a dataset: n_aug variants per example; the answer (and options)
/// are copied untouched. New ids are "<parent>-eda<k>".
Dataset eda_augment(Task task, const Dataset& seed, const SynonymDict& dict,
                    const EdaParams& params, std::uint64_t rng_seed);

}  // namespace augloop
