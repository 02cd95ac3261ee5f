#pragma once

#include <memory>
#include <string>

#include "augloop/sim_backends.hpp"

namespace augloop {

/// Serves the simulated teacher and student over the real wire formats on
/// one port: POST /v1/chat/completions (OpenAI chat shape), /v1/finetune and
/// /v1/predict (trainer shape). Lets the HTTP clients and the CLI run
/// end-to-end with no external services.
class SimServer {
 public:
  SimServer(Task task, SimTeacherOptions teacher_options = {},
            SimStudentOptions student_options = {});
  ~SimServer();

  /// Binds and serves on a background thread. port 0 picks a free port.
  void start(const std::string& host = "127.0.0.1", int port = 0);
  void stop();

  int port() const;
  std::string base_url() const;

  SimTeacher& teacher();
  SimStudent& student();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace augloop
