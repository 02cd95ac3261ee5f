#include "augloop/baselines.hpp"

#include <iostream>

#include "augloop/prompts.hpp"
#include "augloop/teacher_parse.hpp"

namespace augloop {

Dataset teacher_augment_all(Task task, const Dataset& data, TeacherClient& teacher,
                            int k) {
  Dataset augmented;
  for (const auto& ex : data) {
    std::string completion;
    try {
      completion = teacher.complete(build_teacher_messages(task, ex, k));
    } catch (const std::exception& e) {
      std::cout << "[augment-all] teacher failed on " << ex.id << ": " << e.what()
                << "\n";
      continue;
    }
    std::vector<Example> candidates = parse_generations(task, completion);
    if (candidates.size() > static_cast<size_t>(k)) {
      candidates.resize(static_cast<size_t>(k));
    }
    size_t j = 0;
    for (auto& cand : candidates) {
      if (!validate_format(task, cand)) continue;
      cand.id = ex.id + "-aug" + std::to_string(j++);
      cand.origin = Origin::Augmented;
      cand.iteration = 1;
      cand.parent_id = ex.id;
      augmented.push_back(std::move(cand));
    }
  }
  return augmented;
}

}  // namespace augloop
