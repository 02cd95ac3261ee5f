#include "augloop/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "augloop/text.hpp"

namespace augloop {

Dataset load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  Dataset data;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
    data.push_back(example_from_json(j));
  }
  for (size_t i = 0; i < data.size(); ++i) {
    if (data[i].id.empty()) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "ex-%06zu", i);
      data[i].id = buf;
    }
  }
  return data;
}

void save_jsonl(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset: " + path);
  for (const auto& ex : data) {
    out << example_to_json(ex).dump() << '\n';
  }
}

std::vector<std::string> ids_of(const Dataset& data) {
  std::vector<std::string> ids;
  ids.reserve(data.size());
  for (const auto& ex : data) ids.push_back(ex.id);
  return ids;
}

Dataset sample_random(const Dataset& data, size_t count, std::uint64_t seed) {
  if (count > data.size()) {
    throw std::invalid_argument("sample larger than dataset");
  }
  std::vector<size_t> idx(data.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  Dataset out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(data[idx[i]]);
  return out;
}

Dataset sample_per_class(const Dataset& data,
                         const std::vector<std::string>& labels,
                         size_t per_class, std::uint64_t seed) {
  std::unordered_map<std::string, std::vector<size_t>> by_label;
  for (size_t i = 0; i < data.size(); ++i) {
    by_label[data[i].answer].push_back(i);
  }
  std::mt19937_64 rng(seed);
  Dataset out;
  for (const auto& label : labels) {
    auto it = by_label.find(label);
    if (it == by_label.end() || it->second.size() < per_class) {
      throw std::invalid_argument("class '" + label + "' has fewer than " +
                                  std::to_string(per_class) + " examples");
    }
    auto idx = it->second;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (size_t i = 0; i < per_class; ++i) out.push_back(data[idx[i]]);
  }
  return out;
}

Dataset sample_unseen(const Dataset& pool, const Dataset& exclude,
                      size_t count, std::uint64_t seed) {
  std::unordered_set<std::string> seen;
  for (const auto& ex : exclude) seen.insert(ex.id);
  Dataset candidates;
  for (const auto& ex : pool) {
    if (!seen.count(ex.id)) candidates.push_back(ex);
  }
  return sample_random(candidates, count, seed);
}

}  // namespace augloop
