#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "augloop/backends.hpp"
#include "augloop/synonyms.hpp"
#include "augloop/types.hpp"

namespace augloop {

/// Deterministic stand-ins for the teacher model and the student trainer.
/// They implement the same client interfaces (and, via the simulator server,
/// the same wire formats) as the real backends, so the whole pipeline can be
/// exercised offline with reproducible results.

struct SimTeacherOptions {
  /// Fraction of generated items emitted with a broken format (missing
  /// answer marker, bad label, four options). Exercises the format filter.
  double malformed_rate = 0.0;
  /// Fraction emitted as verbatim copies of the request's example.
  /// Exercises the near-duplicate filter.
  double duplicate_rate = 0.0;
  bool add_preamble = true;
  std::uint64_t seed = 1;
};

/// Replays a scripted teacher: parses the missed example back out of the
/// request prompt and answers with paraphrased variants that keep the label,
/// the numbers and the answer untouched. Paraphrasing is hash-seeded, so a
/// fixed request sequence always yields the same completions.
class SimTeacher : public TeacherClient {
 public:
  explicit SimTeacher(Task task, SimTeacherOptions options = {});

  std::string complete(const ChatMessages& messages) override;

  size_t calls() const { return calls_; }

 private:
  Task task_;
  SimTeacherOptions options_;
  SynonymDict dict_;
  size_t calls_ = 0;
};

struct SimStudentOptions {
  /// A memorized pair "supports" a prompt when their content-word similarity
  /// reaches this value. Similarity is Jaccard weighted by inverse document
  /// frequency over the training set, so prompt scaffolding shared by every
  /// example is discounted and only the example-specific words count.
  /// Paraphrases of an example land around 0.55-0.75 against it; unrelated
  /// examples stay well under 0.3.
  double match_threshold = 0.4;
  /// Per-prompt difficulty is hashed into 1..max_difficulty: a prompt is
  /// answered correctly once that many supporting pairs are in the training
  /// set, so targeted augmentation visibly repairs hard prompts.
  int max_difficulty = 4;
};

/// A trainer whose "model" is the training set itself. Prediction retrieves
/// the most similar memorized completion and degrades it deterministically
/// when the prompt has too little support, which gives the loop honest
/// improve-with-more-data dynamics without any real training.
class SimStudent : public StudentClient {
 public:
  explicit SimStudent(SimStudentOptions options = {});

  std::string finetune(const std::string& run_id, const std::string& init_model,
                       const FinetuneHyperparams& hparams,
                       const std::vector<TrainPair>& examples) override;
  std::vector<std::string> predict(const std::string& model_id,
                                   const std::vector<std::string>& prompts) override;

  size_t finetune_calls() const { return finetune_calls_; }
  const std::vector<size_t>& train_sizes() const { return train_sizes_; }
  size_t model_size(const std::string& model_id) const;

 private:
  struct Model {
    std::vector<TrainPair> pairs;
    std::vector<std::vector<std::string>> token_sets;  // sorted unique content words
    std::unordered_map<std::string, int> doc_freq;     // token -> #pairs containing it
  };

  const Model& require_model(const std::string& model_id) const;

  SimStudentOptions options_;
  std::map<std::string, Model> models_;
  std::vector<size_t> train_sizes_;
  size_t finetune_calls_ = 0;
  int next_model_ = 0;
};

}  // namespace augloop
