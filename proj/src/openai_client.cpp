#include "augloop/openai_client.hpp"

#include <chrono>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace augloop {
namespace {

using nlohmann::json;

/// Splits "http://host:port/prefix" into the part httplib::Client accepts
/// and an optional path prefix to prepend to every endpoint.
void split_base_url(const std::string& base_url, std::string* host_part,
                    std::string* path_prefix) {
  size_t scheme_end = base_url.find("://");
  size_t path_start =
      base_url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (path_start == std::string::npos) {
    *host_part = base_url;
    path_prefix->clear();
    return;
  }
  *host_part = base_url.substr(0, path_start);
  *path_prefix = base_url.substr(path_start);
  while (!path_prefix->empty() && path_prefix->back() == '/') path_prefix->pop_back();
}

bool retryable_status(int status) { return status == 429 || status >= 500; }

}  // namespace

struct OpenAiClient::Impl {
  OpenAiConfig config;
  std::string path_prefix;
  httplib::Client http;

  explicit Impl(OpenAiConfig cfg, const std::string& host_part, std::string prefix)
      : config(std::move(cfg)), path_prefix(std::move(prefix)), http(host_part) {
    http.set_connection_timeout(config.timeout_sec);
    http.set_read_timeout(config.timeout_sec);
    http.set_write_timeout(config.timeout_sec);
    if (!config.api_key.empty()) http.set_bearer_token_auth(config.api_key);
  }
};

OpenAiClient::OpenAiClient(OpenAiConfig config) {
  std::string host_part;
  std::string prefix;
  split_base_url(config.base_url, &host_part, &prefix);
  impl_ = std::make_unique<Impl>(std::move(config), host_part, std::move(prefix));
  if (!impl_->http.is_valid()) {
    throw std::runtime_error("teacher endpoint is not usable: " +
                             impl_->config.base_url +
                             " (https requires a TLS-enabled build)");
  }
}

OpenAiClient::~OpenAiClient() = default;

std::string OpenAiClient::complete(const ChatMessages& messages) {
  json body;
  body["model"] = impl_->config.model;
  body["temperature"] = impl_->config.temperature;
  body["messages"] = json::array();
  for (const auto& m : messages) {
    body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  }
  const std::string payload = body.dump();
  const std::string path = impl_->path_prefix + "/v1/chat/completions";

  std::string last_error;
  for (int attempt = 0; attempt <= impl_->config.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(impl_->config.retry_backoff_ms * attempt));
      std::cout << "[teacher] retry " << attempt << ": " << last_error << "\n";
    }
    auto res = impl_->http.Post(path, payload, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP " + std::to_string(res->status) + ": " +
                   res->body.substr(0, 200);
      if (retryable_status(res->status)) continue;
      throw std::runtime_error("teacher request failed: " + last_error);
    }
    json reply = json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") ||
        reply["choices"].empty()) {
      throw std::runtime_error("teacher reply is not a chat completion: " +
                               res->body.substr(0, 200));
    }
    return reply["choices"][0]["message"]["content"].get<std::string>();
  }
  throw std::runtime_error("teacher request failed after retries: " + last_error);
}

}  // namespace augloop
