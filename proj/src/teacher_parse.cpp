#include "augloop/teacher_parse.hpp"

#include <cctype>
#include <optional>

#include "augloop/extract.hpp"
#include "augloop/text.hpp"

namespace augloop {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

/// Matches lines of the shape "[N. ]Marker ..." case-insensitively, where
/// the item number is optional. Returns the offset just past the marker, or
/// npos when the line does not start an item/field of this kind.
size_t marker_offset(std::string_view line, std::string_view marker) {
  constexpr size_t npos = std::string_view::npos;
  size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  size_t d = i;
  while (d < line.size() && std::isdigit(static_cast<unsigned char>(line[d]))) ++d;
  if (d > i && d < line.size() && (line[d] == '.' || line[d] == ')')) {
    ++d;
    while (d < line.size() && std::isspace(static_cast<unsigned char>(line[d]))) ++d;
    i = d;
  }
  if (line.size() - i < marker.size()) return npos;
  for (size_t k = 0; k < marker.size(); ++k) {
    char a = static_cast<char>(std::tolower(static_cast<unsigned char>(line[i + k])));
    char b = static_cast<char>(std::tolower(static_cast<unsigned char>(marker[k])));
    if (a != b) return npos;
  }
  return i + marker.size();
}

std::string_view after_marker(std::string_view line, size_t offset) {
  while (offset < line.size() && line[offset] == ' ') ++offset;
  return line.substr(offset);
}

void append_line(std::string& field, std::string_view line) {
  std::string trimmed = trim(line);
  if (trimmed.empty()) return;
  if (!field.empty()) field += '\n';
  field += trimmed;
}

/// A. / B) style option starts; returns the option index or -1.
int option_index(std::string_view line, size_t* text_offset) {
  size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (i >= line.size()) return -1;
  char c = line[i];
  if (c < 'A' || c > 'E') return -1;
  if (i + 1 >= line.size() || (line[i + 1] != '.' && line[i + 1] != ')')) return -1;
  size_t j = i + 2;
  if (j < line.size() && line[j] != ' ') return -1;
  while (j < line.size() && line[j] == ' ') ++j;
  *text_offset = j;
  return c - 'A';
}

std::vector<Example> parse_question_answer(std::string_view completion,
                                           std::string_view body_marker,
                                           std::string_view answer_marker) {
  std::vector<Example> items;
  Example current;
  bool in_item = false;
  bool in_answer = false;
  auto flush = [&] {
    if (!in_item) return;
    current.question = trim(current.question);
    current.answer = trim(current.answer);
    if (!current.question.empty()) items.push_back(current);
    current = Example{};
    in_item = false;
    in_answer = false;
  };
  for (std::string_view line : split_lines(completion)) {
    if (size_t off = marker_offset(line, body_marker); off != std::string_view::npos) {
      flush();
      in_item = true;
      append_line(current.question, after_marker(line, off));
      continue;
    }
    if (!in_item) continue;
    if (size_t off = marker_offset(line, answer_marker); off != std::string_view::npos) {
      in_answer = true;
      append_line(current.answer, after_marker(line, off));
      continue;
    }
    append_line(in_answer ? current.answer : current.question, line);
  }
  flush();
  return items;
}

/// Single-line label variant: the body runs until the label marker, and the
/// label is exactly the remainder of that marker's line.
std::vector<Example> parse_body_label(std::string_view completion,
                                      std::string_view body_marker,
                                      std::string_view label_marker) {
  std::vector<Example> items;
  Example current;
  bool in_item = false;
  bool have_label = false;
  auto flush = [&] {
    if (!in_item) return;
    current.question = trim(current.question);
    current.answer = trim(current.answer);
    if (!current.question.empty()) items.push_back(current);
    current = Example{};
    in_item = false;
    have_label = false;
  };
  for (std::string_view line : split_lines(completion)) {
    if (size_t off = marker_offset(line, body_marker); off != std::string_view::npos) {
      flush();
      in_item = true;
      append_line(current.question, after_marker(line, off));
      continue;
    }
    if (!in_item) continue;
    if (size_t off = marker_offset(line, label_marker);
        off != std::string_view::npos && !have_label) {
      current.answer = trim(after_marker(line, off));
      have_label = true;
      continue;
    }
    if (!have_label) append_line(current.question, line);
  }
  flush();
  return items;
}

std::vector<Example> parse_casehold(std::string_view completion) {
  std::vector<Example> items;
  Example current;
  bool in_item = false;
  bool in_options = false;
  int active_option = -1;
  auto flush = [&] {
    if (!in_item) return;
    current.question = trim(current.question);
    for (auto& opt : current.options) opt = trim(opt);
    current.answer = trim(current.answer);
    if (!current.question.empty()) items.push_back(current);
    current = Example{};
    in_item = false;
    in_options = false;
    active_option = -1;
  };
  for (std::string_view line : split_lines(completion)) {
    if (size_t off = marker_offset(line, "Context:"); off != std::string_view::npos) {
      flush();
      in_item = true;
      append_line(current.question, after_marker(line, off));
      continue;
    }
    if (!in_item) continue;
    size_t text_offset = 0;
    if (int idx = option_index(line, &text_offset); idx >= 0) {
      in_options = true;
      active_option = idx;
      if (current.options.size() < static_cast<size_t>(idx) + 1) {
        current.options.resize(static_cast<size_t>(idx) + 1);
      }
      append_line(current.options[static_cast<size_t>(idx)], line.substr(text_offset));
      continue;
    }
    if (size_t off = marker_offset(line, "Answer:"); off != std::string_view::npos) {
      current.answer = trim(after_marker(line, off));
      active_option = -1;
      continue;
    }
    // The "Please select ..." scaffold sentence belongs to the prompt
    // template, not the context, so it is dropped here and re-added when the
    // example is rendered for the student.
    if (marker_offset(line, "Please select") != std::string_view::npos) {
      in_options = true;
      continue;
    }
    if (in_options) {
      if (active_option >= 0) {
        append_line(current.options[static_cast<size_t>(active_option)], line);
      }
    } else {
      append_line(current.question, line);
    }
  }
  flush();
  return items;
}

}  // namespace

std::vector<Example> parse_generations(Task task, std::string_view completion) {
  switch (task) {
    case Task::Gsm8k:
      return parse_question_answer(completion, "Question:", "Answer:");
    case Task::CaseHold:
      return parse_casehold(completion);
    case Task::Snips:
      return parse_body_label(completion, "Transcript:", "Intent:");
    case Task::Trec:
      return parse_body_label(completion, "Question:", "Class:");
    case Task::Sst2:
      return parse_body_label(completion, "Review:", "Sentiment:");
  }
  return {};
}

bool validate_format(Task task, Example& candidate) {
  if (trim(candidate.question).empty()) return false;
  switch (task) {
    case Task::Gsm8k:
      return extract_marked_number(candidate.answer).has_value();
    case Task::CaseHold: {
      if (candidate.question.find("<HOLDING>") == std::string::npos) return false;
      if (candidate.options.size() != 5) return false;
      for (const auto& opt : candidate.options) {
        if (trim(opt).empty()) return false;
      }
      auto letter = extract_choice_letter(candidate.answer);
      if (!letter) return false;
      candidate.answer = *letter;
      return true;
    }
    case Task::Snips:
    case Task::Trec:
    case Task::Sst2: {
      std::string wanted = normalize_for_match(candidate.answer);
      for (const auto& label : task_labels(task)) {
        if (normalize_for_match(label) == wanted) {
          candidate.answer = label;
          return true;
        }
      }
      return false;
    }
  }
  return false;
}

}  // namespace augloop
