#pragma once

#include <string>
#include <vector>

#include "augloop/chat.hpp"

namespace augloop {

/// Fine-tuning hyperparameters forwarded verbatim to the student trainer.
/// The defaults are the ones every run in this project uses unless a config
/// overrides them.
struct FinetuneHyperparams {
  int max_seq_len = 1024;
  int epochs = 3;
  int batch_size = 128;
  double learning_rate = 2e-5;
  double weight_decay = 0.0;
  double warmup_ratio = 0.03;
  std::string lr_scheduler = "cosine";
};

struct TrainPair {
  std::string prompt;
  std::string completion;
};

/// Chat-completion side: given a full message list (system prompt, in-context
/// example, request), return the assistant's text.
class TeacherClient {
 public:
  virtual ~TeacherClient() = default;
  virtual std::string complete(const ChatMessages& messages) = 0;
};

/// Trainer/inference side. `finetune` starts from `init_model` (a base model
/// name, or a previous model_id when training continuously) and returns an
/// opaque model_id usable with `predict`.
class StudentClient {
 public:
  virtual ~StudentClient() = default;
  virtual std::string finetune(const std::string& run_id,
                               const std::string& init_model,
                               const FinetuneHyperparams& hparams,
                               const std::vector<TrainPair>& examples) = 0;
  virtual std::vector<std::string> predict(const std::string& model_id,
                                           const std::vector<std::string>& prompts) = 0;
};

}  // namespace augloop
