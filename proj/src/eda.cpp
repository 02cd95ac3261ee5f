#include "augloop/eda.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "augloop/text.hpp"

namespace augloop {

namespace {

size_t pick(std::mt19937_64& rng, size_t n) {
  return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

/// Indices of words eligible for an operation.
std::vector<size_t> eligible_indices(const std::vector<std::string>& words,
                                     const TokenGuard& guard,
                                     bool skip_stop_words) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < words.size(); ++i) {
    if (guard && guard(words[i])) continue;
    if (skip_stop_words && is_stop_word(words[i])) continue;
    idx.push_back(i);
  }
  return idx;
}

/// Swap a token's core for a synonym, keeping attached edge punctuation and
/// a leading capital.
std::string substitute_core(const std::string& token,
                            const std::string& synonym) {
  size_t b = 0;
  size_t e = token.size();
  while (b < e && !std::isalnum(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && !std::isalnum(static_cast<unsigned char>(token[e - 1]))) --e;
  std::string out = token.substr(0, b);
  std::string core = synonym;
  if (e > b && std::isupper(static_cast<unsigned char>(token[b])) &&
      !core.empty()) {
    core[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(core[0])));
  }
  out += core;
  out += token.substr(e);
  return out;
}

}  // namespace

TokenGuard task_token_guard(Task task) {
  switch (task) {
    case Task::Gsm8k:
      return [](const std::string& tok) {
        return contains_digit(tok) || tok.find("####") != std::string::npos ||
               tok.find("<<") != std::string::npos ||
               tok.find(">>") != std::string::npos ||
               tok.find('$') != std::string::npos;
      };
    case Task::CaseHold:
      return [](const std::string& tok) {
        return tok.find("<HOLDING>") != std::string::npos;
      };
    default:
      return TokenGuard{};
  }
}

std::vector<std::string> synonym_replacement(std::vector<std::string> words,
                                             size_t n, const SynonymDict& dict,
                                             const TokenGuard& guard,
                                             std::mt19937_64& rng) {
  auto candidates = eligible_indices(words, guard, /*skip_stop_words=*/true);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  size_t replaced = 0;
  for (size_t idx : candidates) {
    if (replaced >= n) break;
    const auto* syns = dict.lookup(strip_edge_punct(words[idx]));
    if (!syns || syns->empty()) continue;
    words[idx] = substitute_core(words[idx], (*syns)[pick(rng, syns->size())]);
    ++replaced;
  }
  return words;
}

std::vector<std::string> random_insertion(std::vector<std::string> words,
                                          size_t n, const SynonymDict& dict,
                                          const TokenGuard& guard,
                                          std::mt19937_64& rng) {
  for (size_t k = 0; k < n; ++k) {
    auto sources = eligible_indices(words, guard, /*skip_stop_words=*/true);
    // Keep only source words that actually have synonyms.
    std::vector<size_t> with_syns;
    for (size_t idx : sources) {
      const auto* syns = dict.lookup(strip_edge_punct(words[idx]));
      if (syns && !syns->empty()) with_syns.push_back(idx);
    }
    if (with_syns.empty()) break;
    size_t src = with_syns[pick(rng, with_syns.size())];
    const auto* syns = dict.lookup(strip_edge_punct(words[src]));
    const std::string& synonym = (*syns)[pick(rng, syns->size())];
    size_t pos = pick(rng, words.size() + 1);
    words.insert(words.begin() + pos, synonym);
  }
  return words;
}

std::vector<std::string> random_swap(std::vector<std::string> words, size_t n,
                                     const TokenGuard& guard,
                                     std::mt19937_64& rng) {
  auto movable = eligible_indices(words, guard, /*skip_stop_words=*/false);
  if (movable.size() < 2) return words;
  for (size_t k = 0; k < n; ++k) {
    size_t a = movable[pick(rng, movable.size())];
    size_t b = movable[pick(rng, movable.size())];
    std::swap(words[a], words[b]);
  }
  return words;
}

std::vector<std::string> random_deletion(const std::vector<std::string>& words,
                                         double p, const TokenGuard& guard,
                                         std::mt19937_64& rng) {
  std::vector<std::string> kept;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const auto& w : words) {
    if (guard && guard(w)) {
      kept.push_back(w);
      continue;
    }
    if (coin(rng) >= p) kept.push_back(w);
  }
  if (kept.empty() && !words.empty()) {
    kept.push_back(words[pick(rng, words.size())]);
  }
  return kept;
}

std::vector<std::string> eda_variants(const std::string& text,
                                      const SynonymDict& dict,
                                      const TokenGuard& guard,
                                      const EdaParams& params,
                                      std::mt19937_64& rng) {
  const auto words = split_whitespace(text);
  std::vector<std::string> variants;
  if (words.empty()) return variants;
  const auto count = [&](double alpha) {
    return std::max<size_t>(
        1, static_cast<size_t>(std::lround(alpha * words.size())));
  };
  for (int k = 0; k < params.n_aug; ++k) {
    std::vector<std::string> out;
    switch (k % 4) {
      case 0:
        out = synonym_replacement(words, count(params.alpha_sr), dict, guard,
                                  rng);
        break;
      case 1:
        out = random_insertion(words, count(params.alpha_ri), dict, guard, rng);
        break;
      case 2:
        out = random_swap(words, count(params.alpha_rs), guard, rng);
        break;
      case 3:
        out = random_deletion(words, params.p_rd, guard, rng);
        break;
    }
    variants.push_back(join(out, " "));
  }
  return variants;
}

Dataset eda_augment(Task task, const Dataset& seed, const SynonymDict& dict,
                    const EdaParams& params, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  TokenGuard guard = task_token_guard(task);
  Dataset out;
  for (const auto& ex : seed) {
    auto variants = eda_variants(ex.question, dict, guard, params, rng);
    for (size_t k = 0; k < variants.size(); ++k) {
      Example aug = ex;
      aug.id = ex.id + "-eda" + std::to_string(k);
      aug.question = variants[k];
      aug.origin = Origin::Augmented;
      aug.parent_id = ex.id;
      out.push_back(std::move(aug));
    }
  }
  return out;
}

}  // namespace augloop
