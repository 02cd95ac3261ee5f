#include "augloop/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace augloop {

namespace {

// Standard English stop word list (the 179-word NLTK set).
const std::unordered_set<std::string>& stop_words() {
  static const std::unordered_set<std::string> kStopWords = {
      "i",          "me",        "my",      "myself",  "we",       "our",
      "ours",       "ourselves", "you",     "you're",  "you've",   "you'll",
      "you'd",      "your",      "yours",   "yourself", "yourselves", "he",
      "him",        "his",       "himself", "she",     "she's",    "her",
      "hers",       "herself",   "it",      "it's",    "its",      "itself",
      "they",       "them",      "their",   "theirs",  "themselves", "what",
      "which",      "who",       "whom",    "this",    "that",     "that'll",
      "these",      "those",     "am",      "is",      "are",      "was",
      "were",       "be",        "been",    "being",   "have",     "has",
      "had",        "having",    "do",      "does",    "did",      "doing",
      "a",          "an",        "the",     "and",     "but",      "if",
      "or",         "because",   "as",      "until",   "while",    "of",
      "at",         "by",        "for",     "with",    "about",    "against",
      "between",    "into",      "through", "during",  "before",   "after",
      "above",      "below",     "to",      "from",    "up",       "down",
      "in",         "out",       "on",      "off",     "over",     "under",
      "again",      "further",   "then",    "once",    "here",     "there",
      "when",       "where",     "why",     "how",     "all",      "any",
      "both",       "each",      "few",     "more",    "most",     "other",
      "some",       "such",      "no",      "nor",     "not",      "only",
      "own",        "same",      "so",      "than",    "too",      "very",
      "s",          "t",         "can",     "will",    "just",     "don",
      "don't",      "should",    "should've", "now",   "d",        "ll",
      "m",          "o",         "re",      "ve",      "y",        "ain",
      "aren",       "aren't",    "couldn",  "couldn't", "didn",    "didn't",
      "doesn",      "doesn't",   "hadn",    "hadn't",  "hasn",     "hasn't",
      "haven",      "haven't",   "isn",     "isn't",   "ma",       "mightn",
      "mightn't",   "mustn",     "mustn't", "needn",   "needn't",  "shan",
      "shan't",     "shouldn",   "shouldn't", "wasn",  "wasn't",   "weren",
      "weren't",    "won",       "won't",   "wouldn",  "wouldn't"};
  return kStopWords;
}

bool is_alnum(unsigned char c) { return std::isalnum(c) != 0; }

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<std::string> word_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (is_alnum(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> content_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (auto& tok : word_tokens(s)) {
    if (!stop_words().count(tok)) out.push_back(std::move(tok));
  }
  return out;
}

bool is_stop_word(std::string_view word) {
  return stop_words().count(to_lower(strip_edge_punct(word))) > 0;
}

std::string strip_edge_punct(std::string_view token) {
  size_t b = 0;
  size_t e = token.size();
  while (b < e && !is_alnum(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && !is_alnum(static_cast<unsigned char>(token[e - 1]))) --e;
  return std::string(token.substr(b, e - b));
}

std::string normalize_for_match(std::string_view s) {
  std::vector<std::string> words;
  for (auto& w : split_whitespace(s)) {
    std::string stripped = strip_edge_punct(w);
    if (!stripped.empty()) words.push_back(to_lower(stripped));
  }
  return join(words, " ");
}

bool contains_digit(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string replace_all(std::string haystack, std::string_view needle,
                        std::string_view replacement) {
  if (needle.empty()) return haystack;
  size_t pos = haystack.find(needle);
  while (pos != std::string::npos) {
    haystack.replace(pos, needle.size(), replacement);
    pos = haystack.find(needle, pos + replacement.size());
  }
  return haystack;
}

}  // namespace augloop
