#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace augloop {

/// Word -> synonyms lookup for the EDA augmenter. Keys are lowercase.
class SynonymDict {
 public:
  static SynonymDict builtin();

  /// File format: one entry per line, "word: syn1, syn2, ...".
  /// '#' starts a comment line.
  static SynonymDict load(const std::string& path);

  void add(const std::string& word, std::vector<std::string> synonyms);

  /// Synonyms for a word (matched case-insensitively), or nullptr.
  const std::vector<std::string>* lookup(const std::string& word) const;

  size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

}  // namespace augloop
