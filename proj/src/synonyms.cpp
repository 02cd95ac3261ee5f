#include "augloop/synonyms.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "augloop/text.hpp"

namespace augloop {

namespace {

struct Entry {
  const char* word;
  const char* synonyms;  // comma-separated
};

// Compact general-purpose table. Deployments with richer augmentation needs
// can load a full thesaurus via SynonymDict::load.
const Entry kBuiltin[] = {
    {"big", "large,huge,enormous"},
    {"small", "little,tiny,miniature"},
    {"fast", "quick,rapid,speedy"},
    {"slow", "sluggish,unhurried"},
    {"happy", "glad,joyful,cheerful"},
    {"sad", "unhappy,gloomy,sorrowful"},
    {"good", "fine,great,excellent"},
    {"bad", "poor,awful,terrible"},
    {"buy", "purchase,acquire"},
    {"sell", "vend,trade"},
    {"make", "create,produce,build"},
    {"get", "obtain,receive,gain"},
    {"give", "hand,grant,provide"},
    {"need", "require,want"},
    {"money", "cash,funds"},
    {"cost", "price,charge"},
    {"earn", "gain,make"},
    {"pay", "spend,remit"},
    {"save", "keep,reserve"},
    {"total", "whole,entire,overall"},
    {"each", "every"},
    {"many", "numerous,several"},
    {"more", "additional,extra"},
    {"friend", "pal,companion,buddy"},
    {"house", "home,residence,dwelling"},
    {"car", "automobile,vehicle"},
    {"store", "shop,market"},
    {"begin", "start,commence"},
    {"end", "finish,conclude"},
    {"ask", "inquire,question"},
    {"answer", "reply,respond"},
    {"tell", "inform,notify"},
    {"say", "state,mention"},
    {"show", "display,present"},
    {"find", "locate,discover"},
    {"help", "assist,aid"},
    {"walk", "stroll,march"},
    {"run", "sprint,dash,jog"},
    {"eat", "consume,devour"},
    {"drink", "sip,gulp"},
    {"like", "enjoy,appreciate"},
    {"beautiful", "lovely,gorgeous,pretty"},
    {"smart", "clever,intelligent,bright"},
    {"funny", "amusing,humorous,comical"},
    {"boring", "dull,tedious,monotonous"},
    {"movie", "film,picture"},
    {"song", "tune,track,melody"},
    {"music", "melody,tunes"},
    {"play", "perform,start"},
    {"book", "novel,volume"},
    {"rate", "score,grade"},
    {"weather", "forecast,conditions"},
    {"rain", "showers,drizzle"},
    {"snow", "snowfall,flurries"},
    {"cold", "chilly,freezing,frigid"},
    {"hot", "warm,scorching"},
    {"sunny", "bright,clear"},
    {"city", "town,metropolis"},
    {"country", "nation,land"},
    {"restaurant", "diner,eatery,bistro"},
    {"table", "booth,seat"},
    {"near", "close,nearby"},
    {"far", "distant,remote"},
    {"today", "currently,now"},
    {"tomorrow", "later"},
    {"child", "kid,youngster"},
    {"boy", "lad,youth"},
    {"girl", "lass,maiden"},
    {"man", "gentleman,fellow"},
    {"woman", "lady"},
    {"teacher", "instructor,educator"},
    {"student", "pupil,learner"},
    {"school", "academy,institute"},
    {"work", "labor,toil"},
    {"job", "occupation,position"},
    {"question", "query,inquiry"},
    {"problem", "task,exercise,puzzle"},
    {"number", "figure,quantity"},
    {"half", "fifty percent"},
    {"twice", "two times,double"},
    {"week", "seven days"},
    {"year", "twelve months"},
    {"old", "aged,elderly,ancient"},
    {"new", "fresh,recent,novel"},
    {"long", "lengthy,extended"},
    {"short", "brief,concise"},
    {"wonderful", "marvelous,splendid,fantastic"},
    {"terrible", "dreadful,horrible,awful"},
    {"interesting", "engaging,fascinating,intriguing"},
    {"predictable", "unsurprising,formulaic"},
    {"crime", "offense,felony"},
    {"court", "tribunal,bench"},
    {"judge", "justice,magistrate"},
    {"law", "statute,rule"},
    {"case", "lawsuit,proceeding"},
    {"holding", "ruling,determination"},
    {"violence", "force,brutality"},
    {"weapon", "arm,firearm"},
    {"speech", "expression,statement"},
};

}  // namespace

SynonymDict SynonymDict::builtin() {
  SynonymDict dict;
  for (const auto& entry : kBuiltin) {
    std::vector<std::string> syns;
    std::stringstream ss{std::string(entry.synonyms)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) syns.push_back(item);
    }
    dict.add(entry.word, std::move(syns));
  }
  return dict;
}

SynonymDict SynonymDict::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open synonym file: " + path);
  SynonymDict dict;
  std::string line;
  while (std::getline(in, line)) {
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    size_t colon = stripped.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("bad synonym entry (need 'word: a, b'): " +
                               stripped);
    }
    std::string word = trim(stripped.substr(0, colon));
    std::vector<std::string> syns;
    std::stringstream ss{stripped.substr(colon + 1)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::string syn = trim(item);
      if (!syn.empty()) syns.push_back(syn);
    }
    if (word.empty() || syns.empty()) {
      throw std::runtime_error("bad synonym entry: " + stripped);
    }
    dict.add(word, std::move(syns));
  }
  return dict;
}

void SynonymDict::add(const std::string& word,
                      std::vector<std::string> synonyms) {
  entries_[to_lower(word)] = std::move(synonyms);
}

const std::vector<std::string>* SynonymDict::lookup(
    const std::string& word) const {
  auto it = entries_.find(to_lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace augloop
