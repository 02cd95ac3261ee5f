#include "augloop/types.hpp"

#include <stdexcept>

namespace augloop {

std::string task_name(Task task) {
  return kTaskNames[static_cast<int>(task)];
}

Task task_from_name(std::string_view name) {
  for (int i = 0; i < 5; ++i) {
    if (name == kTaskNames[i]) return static_cast<Task>(i);
  }
  throw std::invalid_argument("unknown task: " + std::string(name));
}

const std::vector<std::string>& task_labels(Task task) {
  static const std::vector<std::string> kNone;
  static const std::vector<std::string> kSnips = {
      "AddToPlaylist",      "BookRestaurant", "GetWeather",
      "PlayMusic",          "RateBook",       "SearchCreativeWork",
      "SearchScreeningEvent"};
  static const std::vector<std::string> kTrec = {"ABBR", "ENTY", "DESC",
                                                 "HUM",  "LOC",  "NUM"};
  static const std::vector<std::string> kSst2 = {"positive", "negative"};
  switch (task) {
    case Task::Snips:
      return kSnips;
    case Task::Trec:
      return kTrec;
    case Task::Sst2:
      return kSst2;
    default:
      return kNone;
  }
}

nlohmann::json example_to_json(const Example& ex) {
  nlohmann::json j;
  j["id"] = ex.id;
  j["question"] = ex.question;
  j["answer"] = ex.answer;
  if (!ex.options.empty()) j["options"] = ex.options;
  j["origin"] = ex.origin == Origin::Seed ? "seed" : "augmented";
  j["iteration"] = ex.iteration;
  if (!ex.parent_id.empty()) j["parent_id"] = ex.parent_id;
  return j;
}

Example example_from_json(const nlohmann::json& j) {
  Example ex;
  ex.id = j.value("id", "");
  ex.question = j.at("question").get<std::string>();
  ex.answer = j.at("answer").get<std::string>();
  if (j.contains("options")) {
    ex.options = j.at("options").get<std::vector<std::string>>();
  }
  ex.origin = j.value("origin", "seed") == "augmented" ? Origin::Augmented
                                                       : Origin::Seed;
  ex.iteration = j.value("iteration", 0);
  ex.parent_id = j.value("parent_id", "");
  return ex;
}

}  // namespace augloop
