#include "augloop/sim_backends.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "augloop/eda.hpp"
#include "augloop/extract.hpp"
#include "augloop/teacher_parse.hpp"
#include "augloop/text.hpp"

namespace augloop {
namespace {

constexpr char kOptionLetters[] = {'A', 'B', 'C', 'D', 'E'};

std::string slice_between(std::string_view text, std::string_view after,
                          std::string_view before) {
  size_t start = text.find(after);
  if (start == std::string_view::npos) return {};
  start += after.size();
  size_t end = before.empty() ? std::string_view::npos : text.find(before, start);
  std::string_view slice = end == std::string_view::npos
                               ? text.substr(start)
                               : text.substr(start, end - start);
  return trim(slice);
}

/// The request templates end with "generate N similar ..." / "another N
/// similar ..." / "N more similar ...", so the count is the last digit run
/// followed by "similar" or "more similar".
int requested_count(std::string_view content) {
  int count = 1;
  size_t i = 0;
  while (i < content.size()) {
    if (!std::isdigit(static_cast<unsigned char>(content[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < content.size() && std::isdigit(static_cast<unsigned char>(content[j]))) ++j;
    std::string_view tail = content.substr(j);
    if (tail.rfind(" similar", 0) == 0 || tail.rfind(" more similar", 0) == 0) {
      count = std::atoi(std::string(content.substr(i, j - i)).c_str());
    }
    i = j;
  }
  return std::max(count, 1);
}

/// Recovers the missed example embedded in the request prompt.
Example parse_request(Task task, const std::string& content) {
  Example missed;
  switch (task) {
    case Task::Gsm8k:
      missed.question =
          slice_between(content, "question:\n\n", "\n\nThe answer key");
      missed.answer =
          slice_between(content, "rationale and answer:\n\n", "\n\nPlease generate");
      break;
    case Task::CaseHold: {
      auto items = parse_generations(Task::CaseHold, content);
      if (!items.empty()) missed = items.front();
      break;
    }
    case Task::Snips:
      missed.question = slice_between(content, "\nTranscript: ", "\n\nIntent: ");
      missed.answer = slice_between(content, "\n\nIntent: ", "\n\nGive me another");
      break;
    case Task::Trec:
      missed.question = slice_between(content, "\nQuestion: ", "\nClass: ");
      missed.answer = slice_between(content, "\nClass: ", "\n\nGive me another");
      break;
    case Task::Sst2:
      missed.question =
          slice_between(content, "positive or negative: ", "\nSentiment: ");
      missed.answer = slice_between(content, "\nSentiment: ", "\n\nGenerate ");
      break;
  }
  if (missed.question.empty() || missed.answer.empty()) {
    throw std::runtime_error("simulated teacher could not parse the request");
  }
  return missed;
}

std::string paraphrase(const std::string& text, Task task,
                       const SynonymDict& dict, std::uint64_t seed) {
  std::vector<std::string> words = split_whitespace(text);
  if (words.empty()) return text;
  std::mt19937_64 rng(seed);
  // Replace about 15% of the words: enough to clear the near-duplicate
  // filter, mild enough that retrieval still pairs the variant with its
  // source.
  size_t n = std::max<size_t>(1, words.size() * 3 / 20);
  std::vector<std::string> out =
      synonym_replacement(words, n, dict, task_token_guard(task), rng);
  // Always work in one harmless filler word. Texts with little dictionary
  // coverage would otherwise produce the same handful of variants over and
  // over, and everything after the first would be (correctly) thrown away
  // as a near-duplicate.
  static const char* kFillers[] = {"really",  "actually", "perhaps", "indeed",
                                   "truly",   "simply",   "surely",  "basically"};
  size_t pos = (seed >> 8) % (out.size() + 1);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), kFillers[seed % 8]);
  return join(out, " ");
}

/// Judicial contexts are long and synonym-poor, so small edits alone cannot
/// keep successive rewrites apart. Real teacher rewrites restructure the
/// prose; this fakes that with a varied lead-in and a varied trailing
/// citation.
std::string decorate_context(std::string variant, std::uint64_t seed) {
  static const char* kLeadIns[] = {
      "On de novo review, ",
      "In the proceedings below, ",
      "On appeal, ",
      "In its briefing, ",
      "Before the panel, ",
      "At sentencing, ",
      "In the underlying action, ",
      "On rehearing, ",
  };
  static const char* kTails[] = {
      " accord Ramos v. Atkin, 512 F.3d 301, 309,",
      " see also Turner v. Gables, 233 F.3d 84, 90,",
      " cf. Whitfield v. Onas, 871 F.2d 112, 118,",
      " accord Pell v. Marek, 640 F.3d 455, 461,",
      " see also Ondrick v. Lyle, 905 F.2d 77, 83,",
      " cf. Harmon v. Giles, 402 F.3d 118, 125,",
      " accord Voss v. Craddock, 748 F.3d 210, 216,",
      " see also Mercer v. Hollis, 333 F.3d 19, 27,",
  };
  return kLeadIns[(seed >> 17) % 8] + std::move(variant) + kTails[(seed >> 23) % 8];
}

enum class ItemMode { Paraphrase, Malformed, Duplicate };

std::string render_item(Task task, const Example& missed, int index,
                        ItemMode mode, const std::string& variant) {
  const std::string idx = std::to_string(index) + ". ";
  switch (task) {
    case Task::Gsm8k: {
      std::string answer = missed.answer;
      if (mode == ItemMode::Malformed) {
        size_t pos = answer.rfind("####");
        if (pos != std::string::npos) answer = trim(answer.substr(0, pos));
        if (answer.empty()) answer = "The answer is unclear.";
      }
      return idx + "Question: " + variant + "\nAnswer: " + answer;
    }
    case Task::CaseHold: {
      std::string out = idx + "Context: " + variant +
                        "\n\nPlease select the correct holding statement from "
                        "the options below.\n\n";
      size_t shown =
          mode == ItemMode::Malformed ? missed.options.size() - 1 : missed.options.size();
      for (size_t i = 0; i < shown; ++i) {
        out += kOptionLetters[i];
        out += ". " + missed.options[i] + "\n";
      }
      out += "Answer: " + missed.answer;
      return out;
    }
    case Task::Snips:
      return idx + "Transcript: " + variant + "\nIntent: " +
             (mode == ItemMode::Malformed ? "UnknownIntent" : missed.answer);
    case Task::Trec:
      return idx + "Question: " + variant + "\nClass: " +
             (mode == ItemMode::Malformed ? "OTHER" : missed.answer);
    case Task::Sst2:
      return idx + "Review: " + variant + "\nSentiment: " +
             (mode == ItemMode::Malformed ? "neutral" : missed.answer);
  }
  throw std::logic_error("unhandled task");
}

std::vector<std::string> sorted_unique_content(const std::string& text) {
  std::vector<std::string> tokens = content_tokens(text);
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

/// Jaccard over sorted unique token sets, weighted by inverse document
/// frequency. Tokens present in every memorized pair (prompt scaffolding)
/// carry almost no weight, so similarity is driven by the example-specific
/// words.
double weighted_jaccard(const std::vector<std::string>& a,
                        const std::vector<std::string>& b,
                        const std::unordered_map<std::string, int>& doc_freq,
                        size_t n_docs) {
  auto idf = [&](const std::string& token) {
    auto it = doc_freq.find(token);
    int df = it == doc_freq.end() ? 1 : std::max(it->second, 1);
    return std::log(1.0 + static_cast<double>(n_docs) / df);
  };
  double common = 0.0;
  double unioned = 0.0;
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = a[i].compare(b[j]);
    if (cmp == 0) {
      double w = idf(a[i]);
      common += w;
      unioned += w;
      ++i;
      ++j;
    } else if (cmp < 0) {
      unioned += idf(a[i++]);
    } else {
      unioned += idf(b[j++]);
    }
  }
  while (i < a.size()) unioned += idf(a[i++]);
  while (j < b.size()) unioned += idf(b[j++]);
  return unioned == 0.0 ? 0.0 : common / unioned;
}

std::string format_number(double value) {
  if (std::fabs(value - std::llround(value)) < 1e-9) {
    return std::to_string(std::llround(value));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

}  // namespace

SimTeacher::SimTeacher(Task task, SimTeacherOptions options)
    : task_(task), options_(options), dict_(SynonymDict::builtin()) {}

std::string SimTeacher::complete(const ChatMessages& messages) {
  ++calls_;
  const ChatMessage* request = nullptr;
  for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
    if (it->role == "user") {
      request = &*it;
      break;
    }
  }
  if (!request) throw std::runtime_error("simulated teacher: no user message");

  Example missed = parse_request(task_, request->content);
  int k = requested_count(request->content);

  std::vector<std::string> items;
  for (int j = 0; j < k; ++j) {
    std::uint64_t h = fnv1a64(missed.question + "|" + std::to_string(calls_) + "|" +
                              std::to_string(j) + "|" + std::to_string(options_.seed));
    double u = static_cast<double>(h >> 11) / 9007199254740992.0;
    ItemMode mode = ItemMode::Paraphrase;
    if (u < options_.malformed_rate) {
      mode = ItemMode::Malformed;
    } else if (u < options_.malformed_rate + options_.duplicate_rate) {
      mode = ItemMode::Duplicate;
    }
    std::string variant = mode == ItemMode::Duplicate
                              ? missed.question
                              : paraphrase(missed.question, task_, dict_, h);
    if (task_ == Task::CaseHold && mode != ItemMode::Duplicate) {
      variant = decorate_context(std::move(variant), h);
    }
    items.push_back(render_item(task_, missed, j + 1, mode, variant));
  }

  std::string out;
  if (options_.add_preamble) {
    out = "Sure, I can help you with that! Here are the practice problems:\n\n";
  }
  return out + join(items, "\n\n");
}

SimStudent::SimStudent(SimStudentOptions options) : options_(options) {}

std::string SimStudent::finetune(const std::string& run_id,
                                 const std::string& init_model,
                                 const FinetuneHyperparams& hparams,
                                 const std::vector<TrainPair>& examples) {
  if (hparams.epochs <= 0 || hparams.batch_size <= 0) {
    throw std::invalid_argument("simulated student: bad hyperparameters");
  }
  ++finetune_calls_;
  Model model;
  if (auto it = models_.find(init_model); it != models_.end()) {
    model = it->second;  // continue from a previous checkpoint
  }
  for (const auto& ex : examples) {
    std::vector<std::string> tokens = sorted_unique_content(ex.prompt);
    for (const auto& t : tokens) ++model.doc_freq[t];
    model.token_sets.push_back(std::move(tokens));
    model.pairs.push_back(ex);
  }
  train_sizes_.push_back(examples.size());
  std::string model_id =
      "sim-model-" + std::to_string(next_model_++) + "-" + run_id;
  models_[model_id] = std::move(model);
  return model_id;
}

const SimStudent::Model& SimStudent::require_model(const std::string& model_id) const {
  auto it = models_.find(model_id);
  if (it == models_.end()) {
    throw std::runtime_error("simulated student: unknown model " + model_id);
  }
  return it->second;
}

size_t SimStudent::model_size(const std::string& model_id) const {
  return require_model(model_id).pairs.size();
}

std::vector<std::string> SimStudent::predict(const std::string& model_id,
                                             const std::vector<std::string>& prompts) {
  const Model& model = require_model(model_id);
  std::vector<std::string> outputs;
  outputs.reserve(prompts.size());
  for (const auto& prompt : prompts) {
    if (model.pairs.empty()) {
      outputs.emplace_back("I don't know");
      continue;
    }
    std::vector<std::string> tokens = sorted_unique_content(prompt);
    size_t best = 0;
    double best_sim = -1.0;
    int support = 0;
    for (size_t i = 0; i < model.pairs.size(); ++i) {
      double sim = weighted_jaccard(tokens, model.token_sets[i], model.doc_freq,
                                    model.pairs.size());
      if (sim >= options_.match_threshold) ++support;
      if (sim > best_sim) {
        best_sim = sim;
        best = i;
      }
    }
    std::uint64_t h = fnv1a64(normalize_for_match(prompt));
    int difficulty =
        static_cast<int>(h % static_cast<std::uint64_t>(options_.max_difficulty)) + 1;
    if (best_sim <= 0.0) {
      outputs.emplace_back("I don't know");
    } else if (support >= difficulty) {
      outputs.push_back(model.pairs[best].completion);
    } else {
      const std::string& completion = model.pairs[best].completion;
      if (auto num = extract_marked_number(completion)) {
        // Plausible rationale, wrong final number: for value v the result
        // 2v + 1 + difficulty never equals v.
        double v = std::strtod(num->c_str(), nullptr);
        size_t pos = completion.rfind("####");
        outputs.push_back(completion.substr(0, pos) + "#### " +
                          format_number(v * 2 + 1 + difficulty));
      } else {
        std::vector<std::string> others;
        for (const auto& pair : model.pairs) {
          if (pair.completion != completion) others.push_back(pair.completion);
        }
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        if (others.empty()) {
          outputs.push_back(completion + " (unsure)");
        } else {
          outputs.push_back(others[h % others.size()]);
        }
      }
    }
  }
  return outputs;
}

}  // namespace augloop
