#include <doctest.h>

#include <string>

#include "augloop/prompts.hpp"
#include "augloop/types.hpp"

using namespace augloop;

namespace {

Example math_example() {
  Example ex;
  ex.id = "m-1";
  ex.question = "Tom has 3 apples and buys 4 more. How many does he have?";
  ex.answer = "3 + 4 = <<3+4=7>>7\n#### 7";
  return ex;
}

Example intent_example() {
  Example ex;
  ex.id = "i-1";
  ex.question = "play the new single by daft punk";
  ex.answer = "PlayMusic";
  return ex;
}

constexpr const char* kAllTasks[] = {"gsm8k", "casehold", "snips", "trec",
                                     "sst2"};

}  // namespace

TEST_CASE("student prompt for math is the bare problem") {
  CHECK(student_prompt(Task::Gsm8k, math_example()) == math_example().question);
}

TEST_CASE("student prompt for intent classification lists the categories") {
  std::string p = student_prompt(Task::Snips, intent_example());
  CHECK(p ==
        "The following is a transcript of something someone said.\n"
        "Classify the intent of the speaker into the following categories:\n"
        "- AddToPlaylist\n"
        "- BookRestaurant\n"
        "- GetWeather\n"
        "- PlayMusic\n"
        "- RateBook\n"
        "- SearchCreativeWork\n"
        "- SearchScreeningEvent\n"
        "\nTranscript: play the new single by daft punk");
}

TEST_CASE("student prompt for question classification lists the classes") {
  Example ex;
  ex.question = "What country do the Galapagos Islands belong to ?";
  ex.answer = "LOC";
  std::string p = student_prompt(Task::Trec, ex);
  CHECK(p ==
        "The following is a question.\n"
        "Classify the question into the following categories:\n"
        "- ABBR\n- ENTY\n- DESC\n- HUM\n- LOC\n- NUM\n"
        "\nQuestion: What country do the Galapagos Islands belong to ?");
}

TEST_CASE("student prompt for sentiment is a single instruction line") {
  Example ex;
  ex.question = "a gorgeous, witty, seductive movie";
  ex.answer = "positive";
  CHECK(student_prompt(Task::Sst2, ex) ==
        "Classify the following movie review as positive or negative: "
        "a gorgeous, witty, seductive movie");
}

TEST_CASE("student prompt for holdings renders the mask header and options") {
  Example ex = teacher_icl_example(Task::CaseHold);
  std::string p = student_prompt(Task::CaseHold, ex);
  CHECK(p.rfind("The following context is from a judicial decision where the "
                "holding statement has been masked out as <HOLDING>.\n\n"
                "Context: ",
                0) == 0);
  CHECK(p.find("\n\nPlease select the correct holding statement from the "
               "options below.\n\nA. ") != std::string::npos);
  CHECK(p.find("\nE. ") != std::string::npos);
  // Exactly five options are required.
  Example bad = ex;
  bad.options.pop_back();
  CHECK_THROWS(student_prompt(Task::CaseHold, bad));
}

TEST_CASE("student completion is the raw target") {
  CHECK(student_completion(Task::Gsm8k, math_example()) ==
        math_example().answer);
  CHECK(student_completion(Task::Snips, intent_example()) == "PlayMusic");
}

TEST_CASE("math teacher system prompt is pinned verbatim") {
  const std::string& sys = teacher_system_prompt(Task::Gsm8k);
  CHECK(sys ==
        R"__(You are a educational A.I. whose purpose is to take math problems that students get wrong and generate new problems to help them practice their mathematical skills. Your goal is to generate a set of new math problems that reflect the different skills and techniques found in the example problem.

Here are the requirements:
1. A GPT language model should be able to complete the problem. For example, do not ask the assistant to create any visual or audio output. For another example, do not ask the assistant to wake you up at 5pm or set a reminder because it cannot perform any action.
2. The math problem should be in English.
3. The output should be an appropriate response to the question. Make sure the output is less than 100 words.
4. The answer to the problem should be expressed as a number, not a fraction. For example, if the answer is one-half, return 0.5, not 1/2 or "one half".
5. The answer to the problem should not have units i.e. if the answer is 6 cups, just write 6 as the [ANSWER]
6. Always include some calculation to show your work for how you got your ANSWER.
7. Don't make any mathematical mistakes of your own!
8. Try not to copy too much information from the original problem. If you must, try and replace names and numbers so that we can test the student's understanding, rather than their ability to memorize previous test questions.

Always return your instructions in the form:
1. Question: [QUESTION]
Answer: [CALCULATION]
#### [ANSWER])__");
}

TEST_CASE("every system prompt pins the expected output format footer") {
  CHECK(teacher_system_prompt(Task::Gsm8k).ends_with(
      "Always return your instructions in the form:\n"
      "1. Question: [QUESTION]\nAnswer: [CALCULATION]\n#### [ANSWER]"));
  CHECK(teacher_system_prompt(Task::CaseHold).ends_with(
      "A. [OPTION 1]\nB. [OPTION 2]\nC. [OPTION 3]\nD. [OPTION 4]\n"
      "E. [OPTION 5]\nAnswer: [ANSWER]"));
  CHECK(teacher_system_prompt(Task::Snips).ends_with(
      "Always return your instructions in the form:\n"
      "1. Transcript: [CONTEXT]\nIntent: [INTENT]"));
  CHECK(teacher_system_prompt(Task::Trec).ends_with(
      "Always return your instructions in the form:\n"
      "1. Question: [CONTEXT]\nClass: [INTENT]"));
  CHECK(teacher_system_prompt(Task::Sst2).ends_with(
      "Always return your instructions in the form:\n"
      "1. Review: [CONTEXT]\nSentiment: [SENTIMENT]"));
}

TEST_CASE("math teacher request embeds the miss and the rationale") {
  CHECK(teacher_request(Task::Gsm8k, math_example(), 1) ==
        "The student was given the following question:\n\n"
        "Tom has 3 apples and buys 4 more. How many does he have?"
        "\n\nThe answer key has this as the rationale and answer:\n\n"
        "3 + 4 = <<3+4=7>>7\n#### 7"
        "\n\nPlease generate 1 similar question, along with the correct "
        "calculations and rationale.");
  // Plural once more than one generation is requested.
  CHECK(teacher_request(Task::Gsm8k, math_example(), 5)
            .ends_with("Please generate 5 similar questions, along with the "
                       "correct calculations and rationale."));
}

TEST_CASE("intent teacher request repeats the label it wants back") {
  std::string req = teacher_request(Task::Snips, intent_example(), 1);
  CHECK(req.rfind("The following is a transcript whose intent the user got "
                  "wrong including the correct answer from the answer key:",
                  0) == 0);
  CHECK(req.find("\nTranscript: play the new single by daft punk") !=
        std::string::npos);
  CHECK(req.ends_with("\n\nIntent: PlayMusic\n\nGive me another 1 similar "
                      "transcripts with the same answer (PlayMusic)."));
}

TEST_CASE("question and sentiment teacher requests follow their templates") {
  Example trec;
  trec.question = "How far is it to the moon ?";
  trec.answer = "NUM";
  CHECK(teacher_request(Task::Trec, trec, 2)
            .ends_with("\nQuestion: How far is it to the moon ?\nClass: NUM"
                       "\n\nGive me another 2 similar questions with the "
                       "same class (NUM)."));

  Example sst;
  sst.question = "clumsy and unfunny";
  sst.answer = "negative";
  CHECK(teacher_request(Task::Sst2, sst, 1)
            .ends_with("\nSentiment: negative\n\nGenerate 1 more similar "
                       "movie review with the same class."));
}

TEST_CASE("holding teacher request embeds all five options and the answer") {
  std::string req = teacher_request(Task::CaseHold,
                                    teacher_icl_example(Task::CaseHold), 1);
  CHECK(req.find("A. holding that possession of a pipe bomb") !=
        std::string::npos);
  CHECK(req.find("Answer: A\n\nPlease generate 1 similar question, along "
                 "with 5 different holding options and the correct answer.") !=
        std::string::npos);
}

TEST_CASE("teacher message list is system, one-shot pair, then the request") {
  for (const char* name : kAllTasks) {
    Task task = task_from_name(name);
    const Example& icl = teacher_icl_example(task);
    Example missed = icl;  // any well-formed example works as the miss
    ChatMessages messages = build_teacher_messages(task, missed, 1);
    CAPTURE(name);
    REQUIRE(messages.size() == 4);
    CHECK(messages[0].role == "system");
    CHECK(messages[0].content == teacher_system_prompt(task));
    CHECK(messages[1].role == "user");
    CHECK(messages[1].content == teacher_request(task, icl, 1));
    CHECK(messages[2].role == "assistant");
    CHECK(messages[2].content == teacher_icl_response(task));
    CHECK(messages[3].role == "user");
    CHECK(messages[3].content == teacher_request(task, missed, 1));
  }
}
