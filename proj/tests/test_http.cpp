#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "augloop/openai_client.hpp"
#include "augloop/prompts.hpp"
#include "augloop/sim_backends.hpp"
#include "augloop/sim_server.hpp"
#include "augloop/student_client.hpp"
#include "augloop/types.hpp"

using namespace augloop;

namespace {

Example snips_miss() {
  Example ex;
  ex.id = "i-1";
  ex.question = "will it snow in denver tomorrow morning";
  ex.answer = "GetWeather";
  return ex;
}

}  // namespace

TEST_CASE("chat completions over http equal the in-process teacher") {
  SimServer server(Task::Snips);
  server.start();

  OpenAiConfig cfg;
  cfg.base_url = server.base_url();
  cfg.api_key = "test-key";
  OpenAiClient client(cfg);

  // A twin teacher with the same defaults replays the same script.
  SimTeacher twin{Task::Snips};
  auto messages = build_teacher_messages(Task::Snips, snips_miss(), 1);
  CHECK(client.complete(messages) == twin.complete(messages));
  CHECK(client.complete(messages) == twin.complete(messages));
  CHECK(server.teacher().calls() == 2);

  server.stop();
}

TEST_CASE("finetune and predict over http equal the in-process student") {
  SimServer server(Task::Snips);
  server.start();

  StudentEndpointConfig cfg;
  cfg.base_url = server.base_url();
  RestStudentClient client(cfg);

  SimStudent twin;
  std::vector<TrainPair> pairs = {
      {"what is the weather in boston", "GetWeather"},
      {"play my favorite album", "PlayMusic"},
  };
  std::string remote = client.finetune("run", "base", FinetuneHyperparams{}, pairs);
  std::string local = twin.finetune("run", "base", FinetuneHyperparams{}, pairs);
  CHECK(remote == local);

  std::vector<std::string> prompts = {"what is the weather in boston",
                                      "play my favorite album",
                                      "unrelated gibberish zzz"};
  CHECK(client.predict(remote, prompts) == twin.predict(local, prompts));

  server.stop();
}

TEST_CASE("http clients surface server-side errors") {
  SimServer server(Task::Snips);
  server.start();

  StudentEndpointConfig cfg;
  cfg.base_url = server.base_url();
  cfg.max_retries = 0;
  RestStudentClient client(cfg);
  CHECK_THROWS(client.predict("no-such-model", {"p"}));

  FinetuneHyperparams bad;
  bad.epochs = 0;
  CHECK_THROWS(client.finetune("run", "base", bad, {}));

  server.stop();
}

TEST_CASE("clients reject unreachable endpoints after retries") {
  OpenAiConfig cfg;
  cfg.base_url = "http://127.0.0.1:1";  // reserved port, nothing listens
  cfg.max_retries = 0;
  cfg.timeout_sec = 2;
  OpenAiClient client(cfg);
  CHECK_THROWS(client.complete({{"user", "hello"}}));
}

TEST_CASE("the server binds to a free port when asked for port zero") {
  SimServer a(Task::Gsm8k);
  SimServer b(Task::Gsm8k);
  a.start();
  b.start();
  CHECK(a.port() > 0);
  CHECK(b.port() > 0);
  CHECK(a.port() != b.port());
  CHECK(a.base_url() == "http://127.0.0.1:" + std::to_string(a.port()));
  a.stop();
  b.stop();
}
