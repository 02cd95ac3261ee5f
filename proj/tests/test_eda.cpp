#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "augloop/eda.hpp"
#include "augloop/synonyms.hpp"
#include "augloop/text.hpp"

using namespace augloop;

namespace {

/// Multiset of guarded tokens in a piece of text; the guard protections are
/// checked by comparing these before and after augmentation.
std::map<std::string, int> guarded_tokens(const std::string& text,
                                          const TokenGuard& guard) {
  std::map<std::string, int> out;
  for (const auto& tok : split_whitespace(text)) {
    if (guard && guard(tok)) ++out[tok];
  }
  return out;
}

const std::string kMathText =
    "Nora saved 65 dollars and needs 180 - 65 = <<180-65=115>>115 more. "
    "How many weeks? #### 5";

}  // namespace

TEST_CASE("task_token_guard protects math structure") {
  auto guard = task_token_guard(Task::Gsm8k);
  CHECK(guard("180"));
  CHECK(guard("####"));
  CHECK(guard("<<180-65=115>>115"));
  CHECK(guard("$40"));
  CHECK_FALSE(guard("weeks"));

  auto hold = task_token_guard(Task::CaseHold);
  CHECK(hold("(<HOLDING>);"));
  CHECK_FALSE(hold("court"));

  CHECK_FALSE(static_cast<bool>(task_token_guard(Task::Snips)));
}

TEST_CASE("synonym_replacement changes exactly n eligible words") {
  SynonymDict dict;
  dict.add("quick", {"fast"});
  dict.add("happy", {"glad"});
  std::mt19937_64 rng(1);
  auto words = split_whitespace("the quick and happy fox");
  auto out = synonym_replacement(words, 1, dict, TokenGuard{}, rng);
  REQUIRE(out.size() == words.size());
  int changed = 0;
  for (size_t i = 0; i < words.size(); ++i) changed += out[i] != words[i];
  CHECK(changed == 1);
  // Only dictionary words are replaceable, so "fox" and stop words survive.
  CHECK(out[0] == "the");
  CHECK(out[4] == "fox");
}

TEST_CASE("synonym substitution keeps capitalization and edge punctuation") {
  SynonymDict dict;
  dict.add("quick", {"fast"});
  std::mt19937_64 rng(2);
  auto out = synonym_replacement({"Quick,"}, 1, dict, TokenGuard{}, rng);
  CHECK(out[0] == "Fast,");
}

TEST_CASE("random_insertion adds synonyms of existing words") {
  SynonymDict dict;
  dict.add("cat", {"feline"});
  std::mt19937_64 rng(3);
  auto out = random_insertion({"the", "cat", "sat"}, 2, dict, TokenGuard{}, rng);
  CHECK(out.size() == 5);
  CHECK(std::count(out.begin(), out.end(), "feline") == 2);
}

TEST_CASE("random_insertion without any synonym source is a no-op") {
  SynonymDict dict;
  std::mt19937_64 rng(4);
  auto out = random_insertion({"unknown", "words"}, 3, dict, TokenGuard{}, rng);
  CHECK(out == std::vector<std::string>{"unknown", "words"});
}

TEST_CASE("random_swap permutes without changing the token multiset") {
  std::mt19937_64 rng(5);
  std::vector<std::string> words = {"a", "b", "c", "d", "e"};
  auto out = random_swap(words, 3, TokenGuard{}, rng);
  auto sorted_in = words;
  auto sorted_out = out;
  std::sort(sorted_in.begin(), sorted_in.end());
  std::sort(sorted_out.begin(), sorted_out.end());
  CHECK(sorted_in == sorted_out);
}

TEST_CASE("random_deletion keeps guarded words and never empties the text") {
  auto guard = task_token_guard(Task::Gsm8k);
  std::mt19937_64 rng(6);
  auto words = split_whitespace(kMathText);
  auto out = random_deletion(words, 1.0, guard, rng);
  // Deletion probability 1 removes every unguarded word.
  for (const auto& tok : out) CHECK(guard(tok));
  CHECK_FALSE(out.empty());

  // Without a guard, full deletion still keeps one random word.
  auto kept = random_deletion({"only", "words"}, 1.0, TokenGuard{}, rng);
  CHECK(kept.size() == 1);
}

TEST_CASE("eda operations are deterministic per rng seed") {
  SynonymDict dict = SynonymDict::builtin();
  auto guard = task_token_guard(Task::Gsm8k);
  EdaParams params;
  std::mt19937_64 rng_a(99);
  std::mt19937_64 rng_b(99);
  auto va = eda_variants(kMathText, dict, guard, params, rng_a);
  auto vb = eda_variants(kMathText, dict, guard, params, rng_b);
  CHECK(va == vb);
}

TEST_CASE("eda_variants preserves guarded structure across many seeds") {
  SynonymDict dict = SynonymDict::builtin();
  auto guard = task_token_guard(Task::Gsm8k);
  EdaParams params;
  auto original = guarded_tokens(kMathText, guard);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    for (const auto& variant : eda_variants(kMathText, dict, guard, params, rng)) {
      CAPTURE(seed);
      CAPTURE(variant);
      CHECK(guarded_tokens(variant, guard) == original);
    }
  }
}

TEST_CASE("eda_augment produces n_aug variants with lineage metadata") {
  Dataset seed;
  Example ex;
  ex.id = "s-1";
  ex.question = "Nora saved 65 dollars and wants a bicycle.";
  ex.answer = "#### 5";
  seed.push_back(ex);

  EdaParams params;
  params.n_aug = 4;
  Dataset out = eda_augment(Task::Gsm8k, seed, SynonymDict::builtin(), params, 7);
  REQUIRE(out.size() == 4);
  for (size_t k = 0; k < out.size(); ++k) {
    CHECK(out[k].id == "s-1-eda" + std::to_string(k));
    CHECK(out[k].parent_id == "s-1");
    CHECK(out[k].origin == Origin::Augmented);
    CHECK(out[k].answer == "#### 5");
  }
  // Same seed, same output.
  CHECK(eda_augment(Task::Gsm8k, seed, SynonymDict::builtin(), params, 7) == out);
}

TEST_CASE("synonym dict lookup is case-insensitive and loads from files") {
  SynonymDict dict = SynonymDict::builtin();
  REQUIRE(dict.lookup("buy") != nullptr);
  CHECK(dict.lookup("Buy") == dict.lookup("buy"));
  CHECK(dict.lookup("zzz-not-a-word") == nullptr);
}
