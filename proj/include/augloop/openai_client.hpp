#pragma once

#include <memory>
#include <string>

#include "augloop/backends.hpp"

namespace augloop {

inline constexpr char kDefaultTeacherModel[] = "gpt-3.5-turbo-1106";

struct OpenAiConfig {
  std::string base_url = "http://127.0.0.1:8601";
  std::string api_key;  // sent as a Bearer token when non-empty
  std::string model = kDefaultTeacherModel;
  double temperature = 1.0;
  int timeout_sec = 120;
  int max_retries = 3;
  int retry_backoff_ms = 500;
};

/// TeacherClient speaking the OpenAI chat-completions wire format:
/// POST {base_url}/v1/chat/completions with {model, messages, temperature},
/// reading choices[0].message.content from the reply. Works against the real
/// service or anything that clones the endpoint (the bundled simulator
/// server does). Retries transport errors, 429 and 5xx with linear backoff.
class OpenAiClient : public TeacherClient {
 public:
  explicit OpenAiClient(OpenAiConfig config);
  ~OpenAiClient() override;

  std::string complete(const ChatMessages& messages) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace augloop
