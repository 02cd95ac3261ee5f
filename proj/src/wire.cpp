#include "augloop/wire.hpp"

namespace augloop {

using nlohmann::json;

json hyperparams_to_json(const FinetuneHyperparams& hp) {
  return json{{"max_seq_len", hp.max_seq_len},
              {"epochs", hp.epochs},
              {"batch_size", hp.batch_size},
              {"learning_rate", hp.learning_rate},
              {"weight_decay", hp.weight_decay},
              {"warmup_ratio", hp.warmup_ratio},
              {"lr_scheduler", hp.lr_scheduler}};
}

FinetuneHyperparams hyperparams_from_json(const json& j) {
  FinetuneHyperparams hp;
  hp.max_seq_len = j.value("max_seq_len", hp.max_seq_len);
  hp.epochs = j.value("epochs", hp.epochs);
  hp.batch_size = j.value("batch_size", hp.batch_size);
  hp.learning_rate = j.value("learning_rate", hp.learning_rate);
  hp.weight_decay = j.value("weight_decay", hp.weight_decay);
  hp.warmup_ratio = j.value("warmup_ratio", hp.warmup_ratio);
  hp.lr_scheduler = j.value("lr_scheduler", hp.lr_scheduler);
  return hp;
}

json train_pairs_to_json(const std::vector<TrainPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) {
    arr.push_back({{"prompt", p.prompt}, {"completion", p.completion}});
  }
  return arr;
}

std::vector<TrainPair> train_pairs_from_json(const json& j) {
  std::vector<TrainPair> pairs;
  pairs.reserve(j.size());
  for (const auto& item : j) {
    pairs.push_back(TrainPair{item.at("prompt").get<std::string>(),
                              item.at("completion").get<std::string>()});
  }
  return pairs;
}

}  // namespace augloop
