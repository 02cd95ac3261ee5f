#include "augloop/extract.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "augloop/text.hpp"

namespace augloop {

namespace {

bool is_letter_ae(char c) {
  char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return u >= 'A' && u <= 'E';
}

std::string strip_number_decorations(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == ',' || c == '$' || c == ' ') continue;
    out.push_back(c);
  }
  return out;
}

std::optional<long double> parse_number(std::string_view s) {
  std::string cleaned = strip_number_decorations(trim(s));
  if (cleaned.empty()) return std::nullopt;
  const char* begin = cleaned.c_str();
  char* end = nullptr;
  long double value = std::strtold(begin, &end);
  if (end == begin) return std::nullopt;
  // Trailing junk like "14 apples" is fine, but require the leading token
  // to be numeric, and reject a bare sign or dot.
  if (!std::isdigit(static_cast<unsigned char>(*begin)) &&
      !((*begin == '-' || *begin == '+' || *begin == '.') &&
        std::isdigit(static_cast<unsigned char>(begin[1])))) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::optional<std::string> extract_marked_number(std::string_view text) {
  size_t pos = text.rfind("####");
  if (pos == std::string_view::npos) return std::nullopt;
  std::string_view tail = text.substr(pos + 4);
  // Take the first whitespace-delimited token after the marker.
  size_t b = 0;
  while (b < tail.size() &&
         std::isspace(static_cast<unsigned char>(tail[b]))) {
    ++b;
  }
  size_t e = b;
  while (e < tail.size() &&
         !std::isspace(static_cast<unsigned char>(tail[e]))) {
    ++e;
  }
  std::string token = strip_number_decorations(tail.substr(b, e - b));
  // Drop trailing punctuation such as "14."
  while (!token.empty() &&
         !std::isdigit(static_cast<unsigned char>(token.back()))) {
    token.pop_back();
  }
  if (token.empty() || !parse_number(token)) return std::nullopt;
  return token;
}

std::optional<std::string> extract_choice_letter(std::string_view text) {
  std::string whole = strip_edge_punct(trim(text));
  if (whole.size() == 1 && is_letter_ae(whole[0])) {
    return std::string(
        1, static_cast<char>(std::toupper(static_cast<unsigned char>(whole[0]))));
  }
  // First standalone uppercase A-E. Lowercase is not scanned because the
  // article "a" would false-positive inside prose.
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < 'A' || c > 'E') continue;
    bool left_ok =
        i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
    bool right_ok = i + 1 == text.size() ||
                    !std::isalnum(static_cast<unsigned char>(text[i + 1]));
    if (left_ok && right_ok) return std::string(1, c);
  }
  return std::nullopt;
}

bool numbers_equal(std::string_view a, std::string_view b) {
  auto na = parse_number(a);
  auto nb = parse_number(b);
  if (na && nb) {
    long double scale =
        std::max<long double>(1.0L, std::max(std::fabs(*na), std::fabs(*nb)));
    return std::fabs(*na - *nb) <= 1e-6L * scale;
  }
  return strip_number_decorations(trim(a)) == strip_number_decorations(trim(b));
}

bool answers_match(Task task, std::string_view prediction,
                   std::string_view gold) {
  switch (task) {
    case Task::Gsm8k: {
      auto pred = extract_marked_number(prediction);
      auto ref = extract_marked_number(gold);
      return pred && ref && numbers_equal(*pred, *ref);
    }
    case Task::CaseHold: {
      auto pred = extract_choice_letter(prediction);
      auto ref = extract_choice_letter(gold);
      return pred && ref && *pred == *ref;
    }
    case Task::Snips:
    case Task::Trec:
    case Task::Sst2:
      return normalize_for_match(prediction) == normalize_for_match(gold);
  }
  return false;
}

}  // namespace augloop
