#pragma once

#include <string>
#include <vector>

#include "augloop/dataset.hpp"
#include "augloop/types.hpp"

namespace augloop {

struct EvalRecord {
  std::string id;
  std::string prediction;
  bool correct = false;
};

struct EvalResult {
  std::vector<EvalRecord> records;
  size_t n_correct = 0;

  double accuracy() const {
    return records.empty()
               ? 0.0
               : static_cast<double>(n_correct) /
                     static_cast<double>(records.size());
  }
};

/// Score one prediction per example under the task's exact-match rule.
/// `predictions` must be aligned with `data`.
EvalResult evaluate_predictions(Task task, const Dataset& data,
                                const std::vector<std::string>& predictions);

/// Examples the model answered incorrectly, in dataset order.
Dataset wrong_examples(const Dataset& data, const EvalResult& result);

}  // namespace augloop
