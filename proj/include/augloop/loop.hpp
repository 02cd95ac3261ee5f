#pragma once

#include <string>
#include <vector>

#include "augloop/backends.hpp"
#include "augloop/dataset.hpp"
#include "augloop/gen_filter.hpp"
#include "augloop/types.hpp"

namespace augloop {

/// Targeted augmentation loop. One round = train the student, find the
/// examples it still gets wrong, have the teacher write one fresh variant
/// per miss, filter, and add the survivors to the training set. The student
/// is retrained from the base model each round (training on top of the
/// previous checkpoint is available as an ablation), and misses are scored
/// against the original seed set so augmentation stays anchored to real
/// data.
struct LoopConfig {
  Task task = Task::Gsm8k;
  int steps = 10;           // augmentation rounds after the initial baseline
  int gens_per_wrong = 1;   // new examples requested per missed example
  double rouge_threshold = kDefaultRougeThreshold;
  /// true: evaluate and augment only the original seed examples.
  /// false: evaluate and augment the whole growing training set, which
  /// compounds (see growth.hpp for the size bounds).
  bool augment_seed_only = true;
  /// true: every round retrains from init_model on the full training set.
  /// false: each round continues from the previous checkpoint on the new
  /// examples only.
  bool from_scratch = true;
  bool stop_when_solved = true;  // stop early once nothing is missed
  std::string init_model = "student-base";
  std::string run_id = "run";
  std::string output_dir;  // per-round artifacts land here; empty disables
  FinetuneHyperparams hparams;
};

struct IterationReport {
  int iteration = 0;
  size_t train_size = 0;
  double seed_accuracy = 0.0;
  size_t n_wrong = 0;
  size_t generated = 0;      // accepted new examples this round
  double test_accuracy = -1.0;  // -1 when no test set was given
  FilterStats filter;        // cumulative across the run
  std::string model_id;
};

struct LoopResult {
  std::vector<IterationReport> iterations;
  Dataset final_train;
  std::string final_model;
  double best_test_accuracy = -1.0;
  int best_test_iteration = -1;
};

class AugmentationLoop {
 public:
  AugmentationLoop(LoopConfig config, TeacherClient& teacher, StudentClient& student);

  /// Runs the loop on `seed`. When `test` is non-empty every round's model
  /// is also scored on it (reporting only; test data never feeds
  /// augmentation).
  LoopResult run(const Dataset& seed, const Dataset& test = {});

 private:
  LoopConfig config_;
  TeacherClient& teacher_;
  StudentClient& student_;
};

}  // namespace augloop
