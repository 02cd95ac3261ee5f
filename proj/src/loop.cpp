#include "augloop/loop.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "augloop/evaluate.hpp"
#include "augloop/prompts.hpp"
#include "augloop/teacher_parse.hpp"

namespace augloop {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<TrainPair> to_train_pairs(Task task, const Dataset& data) {
  std::vector<TrainPair> pairs;
  pairs.reserve(data.size());
  for (const auto& ex : data) {
    pairs.push_back({student_prompt(task, ex), student_completion(task, ex)});
  }
  return pairs;
}

std::vector<std::string> to_prompts(Task task, const Dataset& data) {
  std::vector<std::string> prompts;
  prompts.reserve(data.size());
  for (const auto& ex : data) prompts.push_back(student_prompt(task, ex));
  return prompts;
}

void write_eval_jsonl(const fs::path& path, const EvalResult& result) {
  std::ofstream out(path);
  for (const auto& rec : result.records) {
    out << json{{"id", rec.id}, {"prediction", rec.prediction}, {"correct", rec.correct}}
               .dump()
        << "\n";
  }
}

json report_to_json(const IterationReport& r) {
  return json{{"iteration", r.iteration},
              {"train_size", r.train_size},
              {"seed_accuracy", r.seed_accuracy},
              {"n_wrong", r.n_wrong},
              {"generated", r.generated},
              {"test_accuracy", r.test_accuracy},
              {"model_id", r.model_id},
              {"filter",
               {{"candidates", r.filter.candidates},
                {"format_rejected", r.filter.format_rejected},
                {"near_duplicate_rejected", r.filter.near_duplicate_rejected},
                {"accepted", r.filter.accepted}}}};
}

json config_to_json(const LoopConfig& c) {
  return json{{"task", task_name(c.task)},
              {"steps", c.steps},
              {"gens_per_wrong", c.gens_per_wrong},
              {"rouge_threshold", c.rouge_threshold},
              {"augment_seed_only", c.augment_seed_only},
              {"from_scratch", c.from_scratch},
              {"stop_when_solved", c.stop_when_solved},
              {"init_model", c.init_model},
              {"run_id", c.run_id}};
}

}  // namespace

AugmentationLoop::AugmentationLoop(LoopConfig config, TeacherClient& teacher,
                                   StudentClient& student)
    : config_(std::move(config)), teacher_(teacher), student_(student) {}

LoopResult AugmentationLoop::run(const Dataset& seed, const Dataset& test) {
  if (seed.empty()) throw std::invalid_argument("seed dataset is empty");

  const Task task = config_.task;
  LoopResult result;
  Dataset train = seed;
  for (auto& ex : train) {
    ex.origin = Origin::Seed;
    ex.iteration = 0;
  }

  GenerationFilter filter(task, config_.rouge_threshold);
  filter.seed_pool(train);
  FilterStats filter_stats;

  const std::vector<std::string> test_prompts = to_prompts(task, test);
  const bool artifacts = !config_.output_dir.empty();
  if (artifacts) fs::create_directories(config_.output_dir);

  std::string prev_model;
  Dataset last_additions;

  for (int iter = 0; iter <= config_.steps; ++iter) {
    // Train. From scratch: the base model sees the whole current set.
    // Continuous: the previous checkpoint sees only what is new.
    const std::string run_tag = config_.run_id + "-i" + std::to_string(iter);
    std::string model_id;
    if (config_.from_scratch || iter == 0) {
      model_id = student_.finetune(run_tag, config_.init_model, config_.hparams,
                                   to_train_pairs(task, train));
    } else {
      model_id = student_.finetune(run_tag, prev_model, config_.hparams,
                                   to_train_pairs(task, last_additions));
    }
    prev_model = model_id;

    // Score. Seed-only mode looks at the original examples; the compounding
    // mode scores everything currently in training.
    const Dataset& eval_set = config_.augment_seed_only ? seed : train;
    EvalResult eval = evaluate_predictions(
        task, eval_set, student_.predict(model_id, to_prompts(task, eval_set)));
    size_t seed_correct = 0;
    for (size_t i = 0; i < seed.size(); ++i) {
      if (eval.records[i].correct) ++seed_correct;
    }
    Dataset wrong = wrong_examples(eval_set, eval);

    IterationReport report;
    report.iteration = iter;
    report.train_size = train.size();
    report.seed_accuracy =
        static_cast<double>(seed_correct) / static_cast<double>(seed.size());
    report.n_wrong = wrong.size();
    report.model_id = model_id;

    if (!test.empty()) {
      EvalResult test_eval = evaluate_predictions(
          task, test, student_.predict(model_id, test_prompts));
      report.test_accuracy = test_eval.accuracy();
      if (report.test_accuracy > result.best_test_accuracy) {
        result.best_test_accuracy = report.test_accuracy;
        result.best_test_iteration = iter;
      }
    }

    fs::path iter_dir;
    if (artifacts) {
      char name[32];
      std::snprintf(name, sizeof(name), "iter-%02d", iter);
      iter_dir = fs::path(config_.output_dir) / name;
      fs::create_directories(iter_dir);
      save_jsonl(train, (iter_dir / "train.jsonl").string());
      write_eval_jsonl(iter_dir / "eval.jsonl", eval);
      save_jsonl(wrong, (iter_dir / "wrong.jsonl").string());
    }

    const bool last_round =
        iter == config_.steps || (config_.stop_when_solved && wrong.empty());

    // Generate. One teacher call per miss; parsed candidates are capped at
    // the requested count, then format- and duplicate-filtered.
    Dataset additions;
    if (!last_round) {
      for (const auto& miss : wrong) {
        std::string completion;
        try {
          completion = teacher_.complete(
              build_teacher_messages(task, miss, config_.gens_per_wrong));
        } catch (const std::exception& e) {
          std::cout << "[loop] teacher failed on " << miss.id << ": " << e.what()
                    << "\n";
          continue;
        }
        std::vector<Example> candidates = parse_generations(task, completion);
        if (candidates.size() > static_cast<size_t>(config_.gens_per_wrong)) {
          candidates.resize(static_cast<size_t>(config_.gens_per_wrong));
        }
        std::vector<Example> accepted =
            filter.filter(std::move(candidates), &filter_stats);
        for (size_t j = 0; j < accepted.size(); ++j) {
          Example& ex = accepted[j];
          ex.id = miss.id + "-g" + std::to_string(iter) + "-" + std::to_string(j);
          ex.origin = Origin::Augmented;
          ex.iteration = iter + 1;
          ex.parent_id = miss.id;
          additions.push_back(std::move(ex));
        }
      }
      report.generated = additions.size();
    }
    report.filter = filter_stats;

    std::cout << "[loop] iter " << iter << ": train=" << report.train_size
              << " seed_acc=" << report.seed_accuracy << " wrong=" << report.n_wrong;
    if (!test.empty()) std::cout << " test_acc=" << report.test_accuracy;
    if (!last_round) std::cout << " accepted=" << report.generated;
    std::cout << "\n";

    if (artifacts) {
      save_jsonl(additions, (iter_dir / "accepted.jsonl").string());
      std::ofstream metrics(iter_dir / "metrics.json");
      metrics << report_to_json(report).dump(2) << "\n";
    }

    result.iterations.push_back(report);
    if (last_round) break;

    train.insert(train.end(), additions.begin(), additions.end());
    last_additions = std::move(additions);
  }

  result.final_train = std::move(train);
  result.final_model = prev_model;

  if (artifacts) {
    save_jsonl(result.final_train,
               (fs::path(config_.output_dir) / "final_train.jsonl").string());
    json history{{"config", config_to_json(config_)},
                 {"final_model", result.final_model},
                 {"best_test_accuracy", result.best_test_accuracy},
                 {"best_test_iteration", result.best_test_iteration},
                 {"iterations", json::array()}};
    for (const auto& r : result.iterations) {
      history["iterations"].push_back(report_to_json(r));
    }
    std::ofstream out(fs::path(config_.output_dir) / "history.json");
    out << history.dump(2) << "\n";
  }
  return result;
}

}  // namespace augloop
