#include "augloop/evaluate.hpp"

#include <stdexcept>
#include <unordered_set>

#include "augloop/extract.hpp"

namespace augloop {

EvalResult evaluate_predictions(Task task, const Dataset& data,
                                const std::vector<std::string>& predictions) {
  if (predictions.size() != data.size()) {
    throw std::invalid_argument("prediction count does not match dataset");
  }
  EvalResult result;
  result.records.reserve(data.size());
  for (size_t i = 0; i < data.size(); ++i) {
    EvalRecord rec;
    rec.id = data[i].id;
    rec.prediction = predictions[i];
    rec.correct = answers_match(task, predictions[i], data[i].answer);
    if (rec.correct) ++result.n_correct;
    result.records.push_back(std::move(rec));
  }
  return result;
}

Dataset wrong_examples(const Dataset& data, const EvalResult& result) {
  std::unordered_set<std::string> wrong_ids;
  for (const auto& rec : result.records) {
    if (!rec.correct) wrong_ids.insert(rec.id);
  }
  Dataset wrong;
  for (const auto& ex : data) {
    if (wrong_ids.count(ex.id)) wrong.push_back(ex);
  }
  return wrong;
}

}  // namespace augloop
