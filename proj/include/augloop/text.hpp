#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace augloop {

/// Lowercase ASCII copy (non-ASCII bytes pass through untouched).
std::string to_lower(std::string_view s);

/// Strip leading/trailing whitespace.
std::string trim(std::string_view s);

/// Split on runs of whitespace, keeping punctuation attached to words.
std::vector<std::string> split_whitespace(std::string_view s);

/// Lowercase and split on runs of non-alphanumeric characters.
/// This is the tokenization used by the ROUGE and overlap metrics.
std::vector<std::string> word_tokens(std::string_view s);

/// word_tokens with English stop words removed.
std::vector<std::string> content_tokens(std::string_view s);

/// True if `word` (lowercased, punctuation-stripped) is an English stop word.
bool is_stop_word(std::string_view word);

/// Strip non-alphanumeric characters from both ends of a token.
std::string strip_edge_punct(std::string_view token);

/// Lowercase, collapse internal whitespace, strip punctuation at token edges.
/// Used for the "string matching after cleanup" comparison on classification
/// tasks.
std::string normalize_for_match(std::string_view s);

bool contains_digit(std::string_view s);

/// Stable 64-bit FNV-1a hash; identical across platforms and runs, unlike
/// std::hash.
std::uint64_t fnv1a64(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool starts_with(std::string_view s, std::string_view prefix);

/// Replace every occurrence of `needle` in `haystack`.
std::string replace_all(std::string haystack, std::string_view needle,
                        std::string_view replacement);

}  // namespace augloop
