#include <doctest.h>

#include <string>
#include <vector>

#include "augloop/text.hpp"

using namespace augloop;

TEST_CASE("trim strips surrounding whitespace only") {
  CHECK(trim("  hello  ") == "hello");
  CHECK(trim("\t a b \n") == "a b");
  CHECK(trim("") == "");
  CHECK(trim("   ") == "");
  CHECK(trim("x") == "x");
}

TEST_CASE("to_lower handles mixed case and non-letters") {
  CHECK(to_lower("Hello World!") == "hello world!");
  CHECK(to_lower("ABC123") == "abc123");
}

TEST_CASE("split_whitespace splits on runs of whitespace") {
  CHECK(split_whitespace("a  b\tc\nd") ==
        std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(split_whitespace("   ").empty());
  CHECK(split_whitespace("one") == std::vector<std::string>{"one"});
}

TEST_CASE("word_tokens lowercases and splits on non-alphanumerics") {
  CHECK(word_tokens("The cat, sat!") ==
        std::vector<std::string>{"the", "cat", "sat"});
  CHECK(word_tokens("don't") == std::vector<std::string>{"don", "t"});
  CHECK(word_tokens("12+7=19") == std::vector<std::string>{"12", "7", "19"});
  CHECK(word_tokens("").empty());
}

TEST_CASE("content_tokens drops stop words") {
  CHECK(content_tokens("the cat is on a mat") ==
        std::vector<std::string>{"cat", "mat"});
  // "don" and "t" are stop fragments, "stop" is not.
  CHECK(content_tokens("don't stop") == std::vector<std::string>{"stop"});
  CHECK(content_tokens("the a is of").empty());
}

TEST_CASE("is_stop_word matches case-insensitively after edge punctuation") {
  CHECK(is_stop_word("The"));
  CHECK(is_stop_word("(and)"));
  CHECK_FALSE(is_stop_word("cat"));
  CHECK_FALSE(is_stop_word("180"));
}

TEST_CASE("strip_edge_punct removes leading and trailing punctuation") {
  CHECK(strip_edge_punct("(hello)") == "hello");
  CHECK(strip_edge_punct("'quoted,'") == "quoted");
  CHECK(strip_edge_punct("mid-word") == "mid-word");
  CHECK(strip_edge_punct("...") == "");
}

TEST_CASE("normalize_for_match collapses case, spacing and edge punctuation") {
  CHECK(normalize_for_match("  The  Cat, sat!  ") == "the cat sat");
  CHECK(normalize_for_match("GetWeather") == "getweather");
  CHECK(normalize_for_match("") == "");
}

TEST_CASE("contains_digit") {
  CHECK(contains_digit("abc1"));
  CHECK(contains_digit("<<180-65=115>>"));
  CHECK_FALSE(contains_digit("abcd"));
  CHECK_FALSE(contains_digit("####"));
}

TEST_CASE("join concatenates with a separator") {
  CHECK(join({"a", "b", "c"}, " ") == "a b c");
  CHECK(join({}, ",") == "");
  CHECK(join({"x"}, ", ") == "x");
}

TEST_CASE("fnv1a64 matches the published reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}
