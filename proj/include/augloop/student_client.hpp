#pragma once

#include <memory>
#include <string>

#include "augloop/backends.hpp"

namespace augloop {

struct StudentEndpointConfig {
  std::string base_url = "http://127.0.0.1:8602";
  int timeout_sec = 600;  // fine-tune calls block until training finishes
  int max_retries = 2;
  int retry_backoff_ms = 500;
};

/// StudentClient over the trainer's REST endpoints:
///   POST {base_url}/v1/finetune {run_id, init_model, hyperparameters,
///                                examples: [{prompt, completion}, ...]}
///     -> {"model_id": "..."}
///   POST {base_url}/v1/predict  {model_id, prompts: [...]}
///     -> {"outputs": [...]} aligned with the prompts
class RestStudentClient : public StudentClient {
 public:
  explicit RestStudentClient(StudentEndpointConfig config);
  ~RestStudentClient() override;

  std::string finetune(const std::string& run_id, const std::string& init_model,
                       const FinetuneHyperparams& hparams,
                       const std::vector<TrainPair>& examples) override;
  std::vector<std::string> predict(const std::string& model_id,
                                   const std::vector<std::string>& prompts) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace augloop
