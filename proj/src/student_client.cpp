#include "augloop/student_client.hpp"

#include <chrono>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "httplib.h"

#include "augloop/wire.hpp"

namespace augloop {
namespace {

using nlohmann::json;

}  // namespace

struct RestStudentClient::Impl {
  StudentEndpointConfig config;
  httplib::Client http;

  explicit Impl(StudentEndpointConfig cfg)
      : config(std::move(cfg)), http(config.base_url) {
    http.set_connection_timeout(config.timeout_sec);
    http.set_read_timeout(config.timeout_sec);
    http.set_write_timeout(config.timeout_sec);
  }

  json post(const std::string& path, const json& body) {
    const std::string payload = body.dump();
    std::string last_error;
    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(
            std::chrono::milliseconds(config.retry_backoff_ms * attempt));
        std::cout << "[student] retry " << attempt << ": " << last_error << "\n";
      }
      auto res = http.Post(path, payload, "application/json");
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status != 200) {
        last_error =
            "HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200);
        if (res->status == 429 || res->status >= 500) continue;
        throw std::runtime_error("student request " + path + " failed: " + last_error);
      }
      json reply = json::parse(res->body, nullptr, false);
      if (reply.is_discarded()) {
        throw std::runtime_error("student reply is not JSON: " +
                                 res->body.substr(0, 200));
      }
      return reply;
    }
    throw std::runtime_error("student request " + path +
                             " failed after retries: " + last_error);
  }
};

RestStudentClient::RestStudentClient(StudentEndpointConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {
  if (!impl_->http.is_valid()) {
    throw std::runtime_error("student endpoint is not usable: " +
                             impl_->config.base_url);
  }
}

RestStudentClient::~RestStudentClient() = default;

std::string RestStudentClient::finetune(const std::string& run_id,
                                        const std::string& init_model,
                                        const FinetuneHyperparams& hparams,
                                        const std::vector<TrainPair>& examples) {
  json body{{"run_id", run_id},
            {"init_model", init_model},
            {"hyperparameters", hyperparams_to_json(hparams)},
            {"examples", train_pairs_to_json(examples)}};
  json reply = impl_->post("/v1/finetune", body);
  if (!reply.contains("model_id")) {
    throw std::runtime_error("finetune reply is missing model_id");
  }
  return reply["model_id"].get<std::string>();
}

std::vector<std::string> RestStudentClient::predict(
    const std::string& model_id, const std::vector<std::string>& prompts) {
  json body{{"model_id", model_id}, {"prompts", prompts}};
  json reply = impl_->post("/v1/predict", body);
  if (!reply.contains("outputs") || !reply["outputs"].is_array()) {
    throw std::runtime_error("predict reply is missing outputs");
  }
  std::vector<std::string> outputs;
  for (const auto& item : reply["outputs"]) outputs.push_back(item.get<std::string>());
  if (outputs.size() != prompts.size()) {
    throw std::runtime_error("predict returned " + std::to_string(outputs.size()) +
                             " outputs for " + std::to_string(prompts.size()) +
                             " prompts");
  }
  return outputs;
}

}  // namespace augloop
