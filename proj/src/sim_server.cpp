#include "augloop/sim_server.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

#include "httplib.h"

#include "augloop/wire.hpp"

namespace augloop {
namespace {

using nlohmann::json;

void reply_error(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(json{{"error", message}}.dump(), "application/json");
}

/// Wraps a handler body so malformed JSON and handler exceptions become
/// 400s instead of dropped connections.
template <typename Fn>
void handle_json(const httplib::Request& req, httplib::Response& res, Fn&& fn) {
  json body = json::parse(req.body, nullptr, false);
  if (body.is_discarded()) {
    reply_error(res, 400, "request body is not JSON");
    return;
  }
  try {
    json reply = fn(body);
    res.set_content(reply.dump(), "application/json");
  } catch (const std::exception& e) {
    reply_error(res, 400, e.what());
  }
}

}  // namespace

struct SimServer::Impl {
  SimTeacher teacher;
  SimStudent student;
  httplib::Server server;
  std::thread thread;
  std::string host;
  int port = -1;

  Impl(Task task, SimTeacherOptions topt, SimStudentOptions sopt)
      : teacher(task, topt), student(sopt) {
    server.Post("/v1/chat/completions",
                [this](const httplib::Request& req, httplib::Response& res) {
                  handle_json(req, res, [this](const json& body) {
                    ChatMessages messages;
                    for (const auto& m : body.at("messages")) {
                      messages.push_back({m.at("role").get<std::string>(),
                                          m.at("content").get<std::string>()});
                    }
                    std::string content = teacher.complete(messages);
                    return json{
                        {"object", "chat.completion"},
                        {"model", body.value("model", "sim-teacher")},
                        {"choices",
                         json::array({json{
                             {"index", 0},
                             {"message",
                              {{"role", "assistant"}, {"content", content}}},
                             {"finish_reason", "stop"}}})}};
                  });
                });
    server.Post("/v1/finetune",
                [this](const httplib::Request& req, httplib::Response& res) {
                  handle_json(req, res, [this](const json& body) {
                    std::string model_id = student.finetune(
                        body.at("run_id").get<std::string>(),
                        body.at("init_model").get<std::string>(),
                        hyperparams_from_json(body.value("hyperparameters", json::object())),
                        train_pairs_from_json(body.at("examples")));
                    return json{{"model_id", model_id}};
                  });
                });
    server.Post("/v1/predict",
                [this](const httplib::Request& req, httplib::Response& res) {
                  handle_json(req, res, [this](const json& body) {
                    std::vector<std::string> prompts;
                    for (const auto& p : body.at("prompts")) {
                      prompts.push_back(p.get<std::string>());
                    }
                    return json{{"outputs", student.predict(
                                                body.at("model_id").get<std::string>(),
                                                prompts)}};
                  });
                });
  }
};

SimServer::SimServer(Task task, SimTeacherOptions teacher_options,
                     SimStudentOptions student_options)
    : impl_(std::make_unique<Impl>(task, teacher_options, student_options)) {}

SimServer::~SimServer() { stop(); }

void SimServer::start(const std::string& host, int port) {
  if (impl_->thread.joinable()) throw std::logic_error("server already started");
  impl_->host = host;
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
    if (impl_->port < 0) throw std::runtime_error("could not bind " + host);
  } else {
    if (!impl_->server.bind_to_port(host, port)) {
      throw std::runtime_error("could not bind " + host + ":" + std::to_string(port));
    }
    impl_->port = port;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void SimServer::stop() {
  if (!impl_->thread.joinable()) return;
  impl_->server.stop();
  impl_->thread.join();
}

int SimServer::port() const { return impl_->port; }

std::string SimServer::base_url() const {
  return "http://" + impl_->host + ":" + std::to_string(impl_->port);
}

SimTeacher& SimServer::teacher() { return impl_->teacher; }
SimStudent& SimServer::student() { return impl_->student; }

}  // namespace augloop
