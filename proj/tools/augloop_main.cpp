#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "augloop/baselines.hpp"
#include "augloop/dataset.hpp"
#include "augloop/eda.hpp"
#include "augloop/evaluate.hpp"
#include "augloop/loop.hpp"
#include "augloop/openai_client.hpp"
#include "augloop/overlap.hpp"
#include "augloop/prompts.hpp"
#include "augloop/sim_backends.hpp"
#include "augloop/sim_server.hpp"
#include "augloop/student_client.hpp"
#include "augloop/types.hpp"

namespace {

using namespace augloop;

const std::vector<std::string> kTaskChoices(std::begin(kTaskNames),
                                            std::end(kTaskNames));

struct TeacherFlags {
  bool sim = false;
  std::string url;
  std::string model = kDefaultTeacherModel;
  std::string api_key_env = "OPENAI_API_KEY";
  double temperature = 1.0;
  double sim_malformed_rate = 0.0;
  double sim_duplicate_rate = 0.0;
  std::uint64_t sim_seed = 1;
};

void add_teacher_flags(CLI::App* cmd, TeacherFlags* f) {
  cmd->add_flag("--sim", f->sim, "Use the in-process simulated teacher");
  cmd->add_option("--teacher-url", f->url,
                  "Chat-completions endpoint, e.g. http://127.0.0.1:8601");
  cmd->add_option("--teacher-model", f->model, "Teacher model name");
  cmd->add_option("--api-key-env", f->api_key_env,
                  "Environment variable holding the API key");
  cmd->add_option("--temperature", f->temperature, "Teacher sampling temperature");
  cmd->add_option("--sim-malformed-rate", f->sim_malformed_rate,
                  "Simulated teacher: fraction of badly formatted items");
  cmd->add_option("--sim-duplicate-rate", f->sim_duplicate_rate,
                  "Simulated teacher: fraction of verbatim copies");
  cmd->add_option("--sim-seed", f->sim_seed, "Simulated teacher seed");
}

std::unique_ptr<TeacherClient> make_teacher(const TeacherFlags& f, Task task) {
  if (f.sim) {
    SimTeacherOptions opts;
    opts.malformed_rate = f.sim_malformed_rate;
    opts.duplicate_rate = f.sim_duplicate_rate;
    opts.seed = f.sim_seed;
    return std::make_unique<SimTeacher>(task, opts);
  }
  if (f.url.empty()) {
    throw CLI::ValidationError("teacher", "pass --sim or --teacher-url");
  }
  OpenAiConfig cfg;
  cfg.base_url = f.url;
  cfg.model = f.model;
  cfg.temperature = f.temperature;
  if (const char* key = std::getenv(f.api_key_env.c_str())) cfg.api_key = key;
  return std::make_unique<OpenAiClient>(cfg);
}

int cmd_run(CLI::App& app) {
  auto* cmd = app.add_subcommand("run", "Run the targeted augmentation loop");
  struct Opts {
    std::string task = "gsm8k";
    std::string seed_path;
    std::string test_path;
    TeacherFlags teacher;
    std::string student_url;
    LoopConfig loop;
    bool augment_all = false;
    bool continuous = false;
    bool no_early_stop = false;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--task", opts->task, "Task name")
      ->check(CLI::IsMember(kTaskChoices));
  cmd->add_option("--seed", opts->seed_path, "Seed training set (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--test", opts->test_path, "Held-out test set (JSONL)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", opts->loop.output_dir, "Directory for per-round artifacts");
  cmd->add_option("--steps", opts->loop.steps, "Augmentation rounds");
  cmd->add_option("--gens-per-wrong", opts->loop.gens_per_wrong,
                  "Generations requested per missed example");
  cmd->add_option("--rouge-threshold", opts->loop.rouge_threshold,
                  "Near-duplicate rejection threshold");
  cmd->add_flag("--augment-all", opts->augment_all,
                "Augment misses from the whole training set, not just the seed");
  cmd->add_flag("--continuous", opts->continuous,
                "Fine-tune the previous checkpoint on new data instead of "
                "retraining from scratch");
  cmd->add_flag("--no-early-stop", opts->no_early_stop,
                "Keep going even when nothing is missed");
  cmd->add_option("--run-id", opts->loop.run_id, "Run identifier");
  cmd->add_option("--init-model", opts->loop.init_model, "Base student model name");
  cmd->add_option("--student-url", opts->student_url, "Student trainer endpoint");
  cmd->add_option("--epochs", opts->loop.hparams.epochs, "Fine-tune epochs");
  cmd->add_option("--batch-size", opts->loop.hparams.batch_size, "Fine-tune batch size");
  cmd->add_option("--lr", opts->loop.hparams.learning_rate, "Learning rate");
  cmd->add_option("--max-seq-len", opts->loop.hparams.max_seq_len, "Max sequence length");
  cmd->add_option("--weight-decay", opts->loop.hparams.weight_decay, "Weight decay");
  cmd->add_option("--warmup-ratio", opts->loop.hparams.warmup_ratio, "Warmup ratio");
  cmd->add_option("--scheduler", opts->loop.hparams.lr_scheduler, "LR scheduler");
  add_teacher_flags(cmd, &opts->teacher);

  cmd->callback([opts] {
    Task task = task_from_name(opts->task);
    opts->loop.task = task;
    opts->loop.augment_seed_only = !opts->augment_all;
    opts->loop.from_scratch = !opts->continuous;
    opts->loop.stop_when_solved = !opts->no_early_stop;

    Dataset seed = load_jsonl(opts->seed_path);
    Dataset test;
    if (!opts->test_path.empty()) test = load_jsonl(opts->test_path);
    std::cout << "[run] task=" << opts->task << " seed=" << seed.size()
              << " test=" << test.size() << "\n";

    std::unique_ptr<TeacherClient> teacher = make_teacher(opts->teacher, task);
    std::unique_ptr<StudentClient> student;
    if (opts->teacher.sim && opts->student_url.empty()) {
      student = std::make_unique<SimStudent>();
    } else if (!opts->student_url.empty()) {
      StudentEndpointConfig cfg;
      cfg.base_url = opts->student_url;
      student = std::make_unique<RestStudentClient>(cfg);
    } else {
      throw CLI::ValidationError("student", "pass --sim or --student-url");
    }

    AugmentationLoop loop(opts->loop, *teacher, *student);
    LoopResult result = loop.run(seed, test);
    const IterationReport& last = result.iterations.back();
    std::cout << "[run] finished after " << result.iterations.size()
              << " rounds: train=" << result.final_train.size()
              << " seed_acc=" << last.seed_accuracy;
    if (result.best_test_iteration >= 0) {
      std::cout << " best_test_acc=" << result.best_test_accuracy << " (round "
                << result.best_test_iteration << ")";
    }
    std::cout << "\n";
  });
  return 0;
}

int cmd_evaluate(CLI::App& app) {
  auto* cmd = app.add_subcommand("evaluate",
                                 "Score predictions with exact-match extraction");
  struct Opts {
    std::string task = "gsm8k";
    std::string data_path;
    std::string predictions_path;
    std::string student_url;
    std::string model_id;
    std::string out_path;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--task", opts->task, "Task name")
      ->check(CLI::IsMember(kTaskChoices));
  cmd->add_option("--data", opts->data_path, "Examples with gold answers (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--predictions", opts->predictions_path,
                  "JSONL of model outputs, aligned with --data (each line a "
                  "JSON string or {\"output\": ...})")
      ->check(CLI::ExistingFile);
  cmd->add_option("--student-url", opts->student_url,
                  "Query a trainer endpoint instead of reading predictions");
  cmd->add_option("--model-id", opts->model_id, "Model to query at --student-url");
  cmd->add_option("--out", opts->out_path, "Write per-example results (JSONL)");

  cmd->callback([opts] {
    Task task = task_from_name(opts->task);
    Dataset data = load_jsonl(opts->data_path);

    std::vector<std::string> predictions;
    if (!opts->predictions_path.empty()) {
      std::ifstream in(opts->predictions_path);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        predictions.push_back(j.is_string() ? j.get<std::string>()
                                            : j.at("output").get<std::string>());
      }
    } else if (!opts->student_url.empty() && !opts->model_id.empty()) {
      StudentEndpointConfig cfg;
      cfg.base_url = opts->student_url;
      RestStudentClient client(cfg);
      std::vector<std::string> prompts;
      for (const auto& ex : data) prompts.push_back(student_prompt(task, ex));
      predictions = client.predict(opts->model_id, prompts);
    } else {
      throw CLI::ValidationError(
          "evaluate", "pass --predictions or --student-url with --model-id");
    }

    EvalResult result = evaluate_predictions(task, data, predictions);
    std::cout << "[evaluate] " << result.n_correct << "/" << result.records.size()
              << " correct, accuracy=" << result.accuracy() << "\n";
    if (!opts->out_path.empty()) {
      std::ofstream out(opts->out_path);
      for (const auto& rec : result.records) {
        out << nlohmann::json{{"id", rec.id},
                              {"prediction", rec.prediction},
                              {"correct", rec.correct}}
                   .dump()
            << "\n";
      }
    }
  });
  return 0;
}

int cmd_augment_eda(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "augment-eda", "Word-level augmentation baseline (synonyms/insert/swap/delete)");
  struct Opts {
    std::string task = "gsm8k";
    std::string data_path;
    std::string out_path;
    std::string synonyms_path;
    EdaParams params;
    std::uint64_t seed = 1;
    bool include_original = false;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--task", opts->task, "Task name")
      ->check(CLI::IsMember(kTaskChoices));
  cmd->add_option("--data", opts->data_path, "Input examples (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", opts->out_path, "Output JSONL")->required();
  cmd->add_option("--synonyms", opts->synonyms_path,
                  "Synonym file (\"word: syn1, syn2\"); default built-in");
  cmd->add_option("--n-aug", opts->params.n_aug, "Variants per example");
  cmd->add_option_function<double>(
      "--alpha",
      [opts](const double& alpha) {
        opts->params.alpha_sr = alpha;
        opts->params.alpha_ri = alpha;
        opts->params.alpha_rs = alpha;
      },
      "Word-change rate for replace/insert/swap");
  cmd->add_option("--p-delete", opts->params.p_rd, "Per-word deletion probability");
  cmd->add_option("--seed", opts->seed, "RNG seed");
  cmd->add_flag("--include-original", opts->include_original,
                "Prepend the input examples to the output");

  cmd->callback([opts] {
    Task task = task_from_name(opts->task);
    Dataset data = load_jsonl(opts->data_path);
    SynonymDict dict = opts->synonyms_path.empty()
                           ? SynonymDict::builtin()
                           : SynonymDict::load(opts->synonyms_path);
    Dataset augmented = eda_augment(task, data, dict, opts->params, opts->seed);
    Dataset out;
    if (opts->include_original) out = data;
    out.insert(out.end(), augmented.begin(), augmented.end());
    save_jsonl(out, opts->out_path);
    std::cout << "[augment-eda] " << data.size() << " -> " << augmented.size()
              << " variants written to " << opts->out_path << "\n";
  });
  return 0;
}

int cmd_augment_teacher(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "augment-teacher", "Untargeted teacher augmentation baseline (every example)");
  struct Opts {
    std::string task = "gsm8k";
    std::string data_path;
    std::string out_path;
    TeacherFlags teacher;
    int k = 1;
    bool include_original = false;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--task", opts->task, "Task name")
      ->check(CLI::IsMember(kTaskChoices));
  cmd->add_option("--data", opts->data_path, "Input examples (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", opts->out_path, "Output JSONL")->required();
  cmd->add_option("-k,--per-example", opts->k, "Variants per example");
  cmd->add_flag("--include-original", opts->include_original,
                "Prepend the input examples to the output");
  add_teacher_flags(cmd, &opts->teacher);

  cmd->callback([opts] {
    Task task = task_from_name(opts->task);
    Dataset data = load_jsonl(opts->data_path);
    std::unique_ptr<TeacherClient> teacher = make_teacher(opts->teacher, task);
    Dataset augmented = teacher_augment_all(task, data, *teacher, opts->k);
    Dataset out;
    if (opts->include_original) out = data;
    out.insert(out.end(), augmented.begin(), augmented.end());
    save_jsonl(out, opts->out_path);
    std::cout << "[augment-teacher] " << data.size() << " -> " << augmented.size()
              << " variants written to " << opts->out_path << "\n";
  });
  return 0;
}

int cmd_overlap(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "overlap-report", "Word-overlap of synthetic examples against a reference set");
  struct Opts {
    std::string synthetic_path;
    std::string reference_path;
    std::string out_path;
    int ngram = 1;
    double threshold = 66.0;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--synthetic", opts->synthetic_path, "Synthetic examples (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--reference", opts->reference_path, "Reference examples (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--ngram", opts->ngram, "N-gram size (1 = single words)");
  cmd->add_option("--threshold", opts->threshold, "High-overlap threshold (%)");
  cmd->add_option("--out", opts->out_path, "Write the full report as JSON");

  cmd->callback([opts] {
    Dataset synthetic = load_jsonl(opts->synthetic_path);
    Dataset reference = load_jsonl(opts->reference_path);
    OverlapStats stats =
        overlap_report(synthetic, reference, opts->ngram, opts->threshold);
    std::cout << "[overlap] examples=" << synthetic.size()
              << " average=" << stats.average << "% above " << opts->threshold
              << "%=" << stats.pct_above << "% max=" << stats.max << "% ("
              << stats.count_at_max << " example(s))\n";
    if (!opts->out_path.empty()) {
      nlohmann::json j{{"average", stats.average},
                       {"pct_above", stats.pct_above},
                       {"threshold", opts->threshold},
                       {"max", stats.max},
                       {"count_at_max", stats.count_at_max},
                       {"ngram", opts->ngram},
                       {"per_example", nlohmann::json::array()}};
      for (size_t i = 0; i < synthetic.size(); ++i) {
        j["per_example"].push_back(
            {{"id", synthetic[i].id}, {"overlap", stats.per_example[i]}});
      }
      std::ofstream out(opts->out_path);
      out << j.dump(2) << "\n";
    }
  });
  return 0;
}

int cmd_sample(CLI::App& app) {
  auto* cmd = app.add_subcommand("sample", "Draw a seed subset from a dataset");
  struct Opts {
    std::string task = "gsm8k";
    std::string data_path;
    std::string out_path;
    std::string exclude_path;
    size_t count = 0;
    size_t per_class = 0;
    std::uint64_t seed = 1;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--task", opts->task, "Task name (for --per-class labels)")
      ->check(CLI::IsMember(kTaskChoices));
  cmd->add_option("--data", opts->data_path, "Source dataset (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", opts->out_path, "Output JSONL")->required();
  cmd->add_option("--count", opts->count, "Number of examples to draw");
  cmd->add_option("--per-class", opts->per_class, "Examples per class label");
  cmd->add_option("--exclude", opts->exclude_path,
                  "Dataset whose ids must not be drawn (JSONL)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", opts->seed, "RNG seed");

  cmd->callback([opts] {
    Dataset data = load_jsonl(opts->data_path);
    Dataset sample;
    if (opts->per_class > 0) {
      Task task = task_from_name(opts->task);
      sample = sample_per_class(data, task_labels(task), opts->per_class, opts->seed);
    } else if (!opts->exclude_path.empty()) {
      Dataset exclude = load_jsonl(opts->exclude_path);
      sample = sample_unseen(data, exclude, opts->count, opts->seed);
    } else if (opts->count > 0) {
      sample = sample_random(data, opts->count, opts->seed);
    } else {
      throw CLI::ValidationError("sample", "pass --count or --per-class");
    }
    save_jsonl(sample, opts->out_path);
    std::cout << "[sample] wrote " << sample.size() << " examples to "
              << opts->out_path << "\n";
  });
  return 0;
}

int cmd_serve_sim(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "serve-sim", "Serve the simulated teacher and student over HTTP");
  struct Opts {
    std::string task = "gsm8k";
    std::string host = "127.0.0.1";
    int port = 8601;
    TeacherFlags teacher;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--task", opts->task, "Task name")
      ->check(CLI::IsMember(kTaskChoices));
  cmd->add_option("--host", opts->host, "Bind address");
  cmd->add_option("--port", opts->port, "Port (0 picks a free one)");
  cmd->add_option("--sim-malformed-rate", opts->teacher.sim_malformed_rate,
                  "Fraction of badly formatted items");
  cmd->add_option("--sim-duplicate-rate", opts->teacher.sim_duplicate_rate,
                  "Fraction of verbatim copies");
  cmd->add_option("--sim-seed", opts->teacher.sim_seed, "Teacher seed");

  cmd->callback([opts] {
    SimTeacherOptions topts;
    topts.malformed_rate = opts->teacher.sim_malformed_rate;
    topts.duplicate_rate = opts->teacher.sim_duplicate_rate;
    topts.seed = opts->teacher.sim_seed;
    SimServer server(task_from_name(opts->task), topts);
    server.start(opts->host, opts->port);
    std::cout << "[serve-sim] " << opts->task << " backends at "
              << server.base_url() << " (chat-completions, finetune, predict)\n";
    while (true) std::this_thread::sleep_for(std::chrono::seconds(60));
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Targeted iterative data augmentation with a teacher model"};
  app.require_subcommand(1);
  cmd_run(app);
  cmd_evaluate(app);
  cmd_augment_eda(app);
  cmd_augment_teacher(app);
  cmd_overlap(app);
  cmd_sample(app);
  cmd_serve_sim(app);
  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
