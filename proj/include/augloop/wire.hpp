#pragma once

#include "json.hpp"

#include "augloop/backends.hpp"

namespace augloop {

/// JSON (de)serialization for the trainer wire format, shared by the REST
/// client and the simulator server so the two sides cannot drift apart.

nlohmann::json hyperparams_to_json(const FinetuneHyperparams& hp);
FinetuneHyperparams hyperparams_from_json(const nlohmann::json& j);

nlohmann::json train_pairs_to_json(const std::vector<TrainPair>& pairs);
std::vector<TrainPair> train_pairs_from_json(const nlohmann::json& j);

}  // namespace augloop
