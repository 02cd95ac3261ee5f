#include "augloop/prompts.hpp"

#include <stdexcept>

#include "augloop/text.hpp"

namespace augloop {

namespace {

const char kOptionLetters[] = {'A', 'B', 'C', 'D', 'E'};

const std::string kGsm8kSystem =
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
#### [ANSWER])__";

const std::string kCaseHoldSystem =
    R"__(You are LawGPT, an AI agent who knows everything there is to know about U.S. law.
You know the result of every court case and you know every law in the lawbook.
The user is trying to choose the correct holding of the case given the context and argument of the court.
You are trying to give the user assistance by giving them more practice questions for the questions that they get wrong.

Here are the requirements:
1. A GPT language model should be able to complete the problem. For example, do not ask the assistant to create any visual or audio output. For another example, do not ask the assistant to wake you up at 5pm or set a reminder because it cannot perform any action.
2. The context, holding, and options should be in english.
3. The questions that you generate should test for whether the user understands the case names and their holdings and whether the user can re-frame relevant holdings to backup the argument in the context.
4. The context should always end with a citation such as "See United States v. Newman, 125 F.3d 863 (10th Cir.1997) (unpublished) (<HOLDING>); United States v. Dodge, 846 F.Supp. 181,"
5. The citation absolutely needs to have the mask phrase <HOLDING> which is the place where the legal holding would normally be.
6. The questions should always be multiple choice.
7. There should always be 5 options: 1 options should be a holding that backs up the argument in the context, the other 4 should be sufficiently different. Each option has to start with the word "holding"
8. There can only be 1 answer: A, B, C, D, or E.
9. Don't make any mistakes matching the holdings yourself.
10. Try not to copy too much information from the original problem. You don't want the user to just memorize their answer.
11. Make the context similar to the context in question, make sure that the holding that is being tested is the same.
12. The wrong answer choices can be any other reasonable holding, but it should be sufficiently different from the correct answer.
13. Do not make your context too short. Remember, these arguments in the context are being made by judges and should look like they were written by a judge.

Always return your instructions in the form:
1. Context: [CONTEXT]

Please select the correct holding statement from the options below.

A. [OPTION 1]
B. [OPTION 2]
C. [OPTION 3]
D. [OPTION 4]
E. [OPTION 5]
Answer: [ANSWER])__";

const std::string kSnipsSystem =
    R"__(You are TranscriptGPT, an AI agent who knows the intent of the transcript of different questions.
You are training someone how to identify people's intents from what they have said.
You are trying to give the user assistance by giving them more practice questions for the questions that they get wrong.

Here are the requirements:
1. A GPT language model should be able to complete the problem. For example, do not ask the assistant to create any visual or audio output. For another example, do not ask the assistant to wake you up at 5pm or set a reminder because it cannot perform any action.
2. The question and options should be in english.
3. The questions that you generate should have only 1 of the following intents:
    - AddToPlaylist
    - BookRestaurant
    - GetWeather
    - PlayMusic
    - RateBook
    - SearchCreativeWork
    - SearchScreeningEvent
4. The questions should always have 1 specific intent.
5. The intent of the question must come from the list above.
6. Don't make any mistakes with your answer yourself.
7. Try not to copy too much information from the original problem. You don't want the user to just memorize the practice problems.
8. Make the intent the same as the question that the user got wrong.
9. The wrong answer choices can be any other reasonable answer, but it should be sufficiently different from the correct answer.
10. The transcript should be something that an ASR model could output: it must sound like something a human could say.

Always return your instructions in the form:
1. Transcript: [CONTEXT]
Intent: [INTENT])__";

const std::string kTrecSystem =
    R"__(You are QuestionGPT, an AI agent who knows the class of different question.
You are training someone how to classify different questions based on what the questions are asking form.
You are trying to give the user assistance by giving them more practice questions for the questions that they get wrong.

Here are the requirements:
1. A GPT language model should be able to complete the problem. For example, do not ask the assistant to create any visual or audio output. For another example, do not ask the assistant to wake you up at 5pm or set a reminder because it cannot perform any action.
2. The question should be in english.
3. The questions that you generate should have only 1 of the following intents:
    - ABBR (Abbreviation)
    - ENTY (Entity)
    - DESC (Description/Concept)
    - HUM (Human)
    - LOC (Location)
    - NUM (Number)
4. The questions should always have 1 specific class.
5. The intent of the question must come from the list above.
6. Don't make any mistakes with your answer yourself.
7. Try not to copy too much information from the original problem. You don't want the user to just memorize the practice problems.
8. Make the class the same as the question that the user got wrong.
9. The question should be something that an ASR model could output: it must sound like something a human could say.

Always return your instructions in the form:
1. Question: [CONTEXT]
Class: [INTENT])__";

const std::string kSst2System =
    R"__(You are MovieReviewerGPT, an AI agent who knows how people review movies.
You are training someone who is classifying movies as positive or negative.
You are trying to give the user assistance by giving them more practice reviews for the reviews that they get wrong.

Here are the requirements:
1. A GPT language model should be able to complete the problem. For example, do not ask the assistant to create any visual or audio output. For another example, do not ask the assistant to wake you up at 5pm or set a reminder because it cannot perform any action.
2. The review should be in english.
3. The reviews that you generate should be either positive or negative.
4. The reviews should always have 1 specific class.
5. Don't make any mistakes with your answer yourself.
6. Try not to copy too much information from the original problem. You don't want the user to just memorize the practice problems.
7. Make the class the same as the review that the user got wrong.
8. The review should be something that a user on the internet could type into a movie review forum.

Always return your instructions in the form:
1. Review: [CONTEXT]
Sentiment: [SENTIMENT])__";

std::string label_list(Task task) {
  std::string out;
  for (const auto& label : task_labels(task)) {
    out += "- " + label + "\n";
  }
  return out;
}

Example make_gsm8k_icl() {
  Example ex;
  ex.id = "icl-gsm8k";
  ex.question =
      "Betty is saving money for a new wallet which costs $100. Betty has "
      "only half of the money she needs. Her parents decided to give her $15 "
      "for that purpose, and her grandparents twice as much as her parents. "
      "How much more money does Betty need to buy the wallet?";
  ex.answer =
      "In the beginning, Betty has only 100 / 2 = $<<100/2=50>>50.\n"
      "Betty's grandparents gave her 15 * 2 = $<<15*2=30>>30.\n"
      "This means, Betty needs 100 - 50 - 30 - 15 = $<<100-50-30-15=5>>5 "
      "more.\n"
      "#### 5";
  return ex;
}

Example make_casehold_icl() {
  Example ex;
  ex.id = "icl-casehold";
  ex.question =
      "Drapeau’s cohorts, the cohort would be a “victim” of "
      "making the bomb. Further, firebombs are inherently dangerous. There "
      "is no peaceful purpose for making a bomb. Felony offenses that "
      "involve explosives qualify as “violent crimes” for purposes "
      "of enhancing the sentences of career offenders. See 18 U.S.C. § "
      "924(e)(2)(B)(ii) (defining a “violent felony” as: “any "
      "crime punishable by imprisonment for a term exceeding one year ... "
      "that ... involves use of explosives”). Courts have found "
      "possession of a'bomb to be a crime of violence based on the lack of "
      "a nonviolent purpose for a bomb and the fact that, by its very "
      "nature, there is a substantial risk that the bomb would be used "
      "against the person or property of another. See United States v. "
      "Newman, 125 F.3d 863 (10th Cir.1997) (unpublished) (<HOLDING>); "
      "United States v. Dodge, 846 F.Supp. 181,";
  ex.options = {
      "holding that possession of a pipe bomb is a crime of violence for "
      "purposes of 18 usc  3142f1",
      "holding that bank robbery by force and violence or intimidation "
      "under 18 usc  2113a is a crime of violence",
      "holding that sexual assault of a child qualified as crime of "
      "violence under 18 usc  16",
      "holding for the purposes of 18 usc  924e that being a felon in "
      "possession of a firearm is not a violent felony as defined in 18 usc "
      " 924e2b",
      "holding that a court must only look to the statutory definition not "
      "the underlying circumstances of the crime to determine whether a "
      "given offense is by its nature a crime of violence for purposes of "
      "18 usc  16"};
  ex.answer = "A";
  return ex;
}

Example make_snips_icl() {
  Example ex;
  ex.id = "icl-snips";
  ex.question = "what s the weather here at 2 pm ',";
  ex.answer = "GetWeather";
  return ex;
}

Example make_trec_icl() {
  Example ex;
  ex.id = "icl-trec";
  ex.question = "What country do the Galapagos Islands belong to ?";
  ex.answer = "LOC";
  return ex;
}

Example make_sst2_icl() {
  Example ex;
  ex.id = "icl-sst2";
  ex.question =
      "as they come , already having been recycled more times than i 'd "
      "care to count";
  ex.answer = "negative";
  return ex;
}

const std::string kGsm8kIclResponse =
    "Sure, I can help you with that! Here's a new math question based on "
    "the same scenario, along with the correct calculations and "
    "rationale:\n\n"
    "1. Question: Betty is saving money for a new wallet which costs $150. "
    "Betty has already saved $30. Her parents decided to give her $20 for "
    "that purpose, and her grandparents gave her three times as much as her "
    "parents. How much more money does Betty need to buy the wallet?\n"
    "Answer: In the beginning, Betty has saved $30. Betty's parents gave "
    "her $20. Betty's grandparents gave her 3 * $20 = $60. Total amount "
    "Betty has: $30 + $20 + $60 = $110. The cost of the wallet is $150. "
    "Amount more needed: $150 - $110 = $40.\n"
    "#### 40";

const std::string kCaseHoldIclResponse =
    "Sure, I can help you with that! Here's a new case holding question "
    "based on that question:\n\n"
    "1. Context: In the case of Martinez v. State, it was determined that "
    "the act of threatening another with a weapon, even if not used, "
    "constitutes a violent act. This is based on the premise that the mere "
    "possession of a weapon with the intent to threaten establishes an "
    "inherent risk of physical harm. Such acts align with the definition of "
    "\"violent crimes\" which can be used as grounds for stricter penalties "
    "under the jurisdiction of certain statutes. Refer to 18 U.S.C. § "
    "16(b) which defines a “crime of violence” as: “any "
    "other offense that is a felony and that, by its nature, involves a "
    "substantial risk that physical force against the person or property of "
    "another may be used in the course of committing the offense.” In "
    "the context of this, the Jones v. Commonwealth, 279 F.3d 722 (4th "
    "Cir.2001) case had a significant <HOLDING>.\n\n"
    "Please select the correct holding statement from the options below.\n\n"
    "A. holding that mere possession of a weapon without any intent does "
    "not constitute a crime of violence under 18 U.S.C. § 16(b)\n"
    "B. holding that using a computer to commit fraud is considered a crime "
    "of violence because of the potential harm to victims' financial "
    "well-being\n"
    "C. holding that threatening another with a weapon, even if not used, "
    "is a crime of violence for purposes of 18 U.S.C. § 16(b)\n"
    "D. holding that in terms of 18 U.S.C. § 16(b), verbal threats "
    "without the presence of a weapon do not qualify as a crime of "
    "violence\n"
    "E. holding that any crime which results in a financial penalty, "
    "irrespective of physical harm, is a crime of violence under 18 U.S.C. "
    "§ 16(b)\n"
    "Answer: C";

const std::string kSnipsIclResponse =
    "Here's a similar transcript with the same intended answer "
    "category:\n\n"
    "1. Transcript: Will it rain in the city this afternoon?\n"
    "Intent: GetWeather";

const std::string kTrecIclResponse =
    "Here's a similar question with the same class:\n\n"
    "1. Question: What country is the Great Barrier Reef located in?\n"
    "Class: LOC";

const std::string kSst2IclResponse =
    "Here's a similar question with the same class:\n\n"
    "1. Review: Feels like a reheated plot, utterly predictable and "
    "uninspired.\n"
    "Sentiment: negative";

}  // namespace

std::string student_prompt(Task task, const Example& ex) {
  switch (task) {
    case Task::Gsm8k:
      return ex.question;
    case Task::CaseHold: {
      if (ex.options.size() != 5) {
        throw std::invalid_argument("casehold example needs 5 options: " +
                                    ex.id);
      }
      std::string out =
          "The following context is from a judicial decision where the "
          "holding statement has been masked out as <HOLDING>.\n\n"
          "Context: " +
          ex.question +
          "\n\nPlease select the correct holding statement from the options "
          "below.\n\n";
      for (size_t i = 0; i < ex.options.size(); ++i) {
        out += kOptionLetters[i];
        out += ". " + ex.options[i] + "\n";
      }
      out.pop_back();
      return out;
    }
    case Task::Snips:
      return "The following is a transcript of something someone said.\n"
             "Classify the intent of the speaker into the following "
             "categories:\n" +
             label_list(task) + "\nTranscript: " + ex.question;
    case Task::Trec:
      return "The following is a question.\n"
             "Classify the question into the following categories:\n" +
             label_list(task) + "\nQuestion: " + ex.question;
    case Task::Sst2:
      return "Classify the following movie review as positive or negative: " +
             ex.question;
  }
  throw std::logic_error("unhandled task");
}

std::string student_completion(Task task, const Example& ex) {
  (void)task;
  return ex.answer;
}

const std::string& teacher_system_prompt(Task task) {
  switch (task) {
    case Task::Gsm8k:
      return kGsm8kSystem;
    case Task::CaseHold:
      return kCaseHoldSystem;
    case Task::Snips:
      return kSnipsSystem;
    case Task::Trec:
      return kTrecSystem;
    case Task::Sst2:
      return kSst2System;
  }
  throw std::logic_error("unhandled task");
}

std::string teacher_request(Task task, const Example& missed, int k) {
  const std::string k_str = std::to_string(k);
  switch (task) {
    case Task::Gsm8k:
      return "The student was given the following question:\n\n" +
             missed.question +
             "\n\nThe answer key has this as the rationale and answer:\n\n" +
             missed.answer + "\n\nPlease generate " + k_str +
             " similar question" + (k == 1 ? "" : "s") +
             ", along with the correct calculations and rationale.";
    case Task::CaseHold: {
      if (missed.options.size() != 5) {
        throw std::invalid_argument("casehold example needs 5 options: " +
                                    missed.id);
      }
      std::string out =
          "The following is a multiple choice question about the holding "
          "statements of a judicial decision that the user got wrong "
          "including the correct answer from the answer sheet:\n\n"
          "Context: " +
          missed.question +
          "\n\nPlease select the correct holding statement from the options "
          "below.\n\n";
      for (size_t i = 0; i < missed.options.size(); ++i) {
        out += kOptionLetters[i];
        out += ". " + missed.options[i] + "\n";
      }
      out += "Answer: " + missed.answer + "\n\nPlease generate " + k_str +
             " similar question" + (k == 1 ? "" : "s") +
             ", along with 5 different holding options and the correct "
             "answer.";
      return out;
    }
    case Task::Snips:
      return "The following is a transcript whose intent the user got wrong "
             "including the correct answer from the answer key:\n\n" +
             student_prompt(task, missed) + "\n\nIntent: " + missed.answer +
             "\n\nGive me another " + k_str +
             " similar transcripts with the same answer (" + missed.answer +
             ").";
    case Task::Trec:
      return "The following is a question that the user was unable to "
             "classify correctly:\n\n"
             "Classify the question into the following categories:\n" +
             label_list(task) + "\nQuestion: " + missed.question +
             "\nClass: " + missed.answer + "\n\nGive me another " + k_str +
             " similar question" + (k == 1 ? "" : "s") +
             " with the same class (" + missed.answer + ").";
    case Task::Sst2:
      return "The following is a movie review that the user classified "
             "incorrectly including the correct classification:\n" +
             student_prompt(task, missed) + "\nSentiment: " + missed.answer +
             "\n\nGenerate " + k_str +
             " more similar movie review" + (k == 1 ? "" : "s") +
             " with the same class.";
  }
  throw std::logic_error("unhandled task");
}

const Example& teacher_icl_example(Task task) {
  static const Example kGsm8k = make_gsm8k_icl();
  static const Example kCaseHold = make_casehold_icl();
  static const Example kSnips = make_snips_icl();
  static const Example kTrec = make_trec_icl();
  static const Example kSst2 = make_sst2_icl();
  switch (task) {
    case Task::Gsm8k:
      return kGsm8k;
    case Task::CaseHold:
      return kCaseHold;
    case Task::Snips:
      return kSnips;
    case Task::Trec:
      return kTrec;
    case Task::Sst2:
      return kSst2;
  }
  throw std::logic_error("unhandled task");
}

const std::string& teacher_icl_response(Task task) {
  switch (task) {
    case Task::Gsm8k:
      return kGsm8kIclResponse;
    case Task::CaseHold:
      return kCaseHoldIclResponse;
    case Task::Snips:
      return kSnipsIclResponse;
    case Task::Trec:
      return kTrecIclResponse;
    case Task::Sst2:
      return kSst2IclResponse;
  }
  throw std::logic_error("unhandled task");
}

ChatMessages build_teacher_messages(Task task, const Example& missed, int k) {
  return {
      {"system", teacher_system_prompt(task)},
      {"user", teacher_request(task, teacher_icl_example(task), 1)},
      {"assistant", teacher_icl_response(task)},
      {"user", teacher_request(task, missed, k)},
  };
}

}  // namespace augloop
