#pragma once

#include <random>
#include <string>
#include <vector>

#include "augloop/types.hpp"

namespace augloop {

using Dataset = std::vector<Example>;

/// Load a JSONL dataset. Records missing an "id" get sequential ids
/// ("ex-000000", ...). Blank lines are skipped; malformed JSON throws.
Dataset load_jsonl(const std::string& path);

void save_jsonl(const Dataset& data, const std::string& path);

std::vector<std::string> ids_of(const Dataset& data);

/// Uniform sample of `count` examples without replacement (order follows the
/// shuffled draw). Throws if count exceeds the dataset size.
Dataset sample_random(const Dataset& data, size_t count, std::uint64_t seed);

/// Uniform per-class sample: `per_class` examples for each label in
/// `labels`, drawn without replacement. Throws if a class is underpopulated.
Dataset sample_per_class(const Dataset& data,
                         const std::vector<std::string>& labels,
                         size_t per_class, std::uint64_t seed);

/// Sample `count` examples whose ids are not in `exclude` (the "more data"
/// baseline draws unseen train examples this way).
Dataset sample_unseen(const Dataset& pool, const Dataset& exclude,
                      size_t count, std::uint64_t seed);

}  // namespace augloop
