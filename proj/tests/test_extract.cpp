#include <doctest.h>

#include "augloop/extract.hpp"
#include "augloop/types.hpp"

using namespace augloop;

TEST_CASE("extract_marked_number reads the token after the last marker") {
  CHECK(extract_marked_number("#### 14") == "14");
  CHECK(extract_marked_number("work...\n#### 5") == "5");
  CHECK(extract_marked_number("#### 3\nmore\n#### 7") == "7");
  CHECK(extract_marked_number("The answer is #### 5,250") == "5250");
  CHECK(extract_marked_number("#### $40") == "40");
  CHECK(extract_marked_number("#### -3.5") == "-3.5");
  CHECK(extract_marked_number("#### 14.") == "14");
  CHECK(extract_marked_number("####16") == "16");
}

TEST_CASE("extract_marked_number rejects missing or non-numeric answers") {
  CHECK_FALSE(extract_marked_number("the answer is 14"));
  CHECK_FALSE(extract_marked_number("#### dunno"));
  CHECK_FALSE(extract_marked_number("####"));
  CHECK_FALSE(extract_marked_number(""));
}

TEST_CASE("extract_choice_letter finds a standalone letter") {
  CHECK(extract_choice_letter("D") == "D");
  CHECK(extract_choice_letter("(d)") == "D");
  CHECK(extract_choice_letter("Answer: C") == "C");
  CHECK(extract_choice_letter("The correct option is B.") == "B");
  CHECK(extract_choice_letter("  e  ") == "E");
}

TEST_CASE("extract_choice_letter ignores letters embedded in words") {
  // No standalone uppercase A-E anywhere: embedded letters do not count.
  CHECK_FALSE(extract_choice_letter("placebo"));
  CHECK_FALSE(extract_choice_letter("not sure"));
  CHECK_FALSE(extract_choice_letter(""));
  // Lowercase prose "a" is an article, not a choice.
  CHECK_FALSE(extract_choice_letter("this is a sentence"));
}

TEST_CASE("numbers_equal compares numerically with decoration stripping") {
  CHECK(numbers_equal("14", "14.0"));
  CHECK(numbers_equal("1,050", "1050"));
  CHECK(numbers_equal("$40", "40"));
  CHECK(numbers_equal("0.5", ".5"));
  CHECK_FALSE(numbers_equal("14", "15"));
  // Unparseable operands fall back to exact string comparison.
  CHECK(numbers_equal("abc", "abc"));
  CHECK_FALSE(numbers_equal("abc", "abd"));
}

TEST_CASE("answers_match applies the task extraction rule") {
  CHECK(answers_match(Task::Gsm8k, "so we get\n#### 40", "#### 40.0"));
  CHECK_FALSE(answers_match(Task::Gsm8k, "#### 41", "#### 40"));
  CHECK_FALSE(answers_match(Task::Gsm8k, "no marker 40", "#### 40"));

  CHECK(answers_match(Task::CaseHold, "Answer: C", "C"));
  CHECK_FALSE(answers_match(Task::CaseHold, "Answer: B", "C"));
  CHECK_FALSE(answers_match(Task::CaseHold, "unsure", "C"));

  CHECK(answers_match(Task::Snips, "GetWeather", "getweather"));
  CHECK(answers_match(Task::Trec, " LOC ", "LOC"));
  CHECK(answers_match(Task::Sst2, "positive", "Positive"));
  CHECK_FALSE(answers_match(Task::Snips, "PlayMusic", "GetWeather"));
}
