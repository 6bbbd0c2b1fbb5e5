#include "ppmisum/porter.hpp"

#include <array>
#include <span>

#include "ppmisum/errors.hpp"

namespace ppmisum {

namespace {

bool is_consonant(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// m in [C](VC)^m[V].
int measure(std::string_view w) {
  const std::size_t len = w.size();
  int m = 0;
  std::size_t i = 0;
  while (i < len && is_consonant(w, i)) ++i;
  while (i < len) {
    while (i < len && !is_consonant(w, i)) ++i;
    if (i >= len) break;
    while (i < len && is_consonant(w, i)) ++i;
    ++m;
  }
  return m;
}

bool contains_vowel(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

// *d: ends with a double consonant.
bool ends_double_consonant(std::string_view w) {
  const std::size_t len = w.size();
  if (len < 2) return false;
  if (w[len - 1] != w[len - 2]) return false;
  return is_consonant(w, len - 1);
}

// *o: ends consonant-vowel-consonant where the final consonant is not
// w, x or y.
bool ends_cvc(std::string_view w) {
  const std::size_t len = w.size();
  if (len < 3) return false;
  if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) ||
      !is_consonant(w, len - 1)) {
    return false;
  }
  const char last = w[len - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
  if (suffix.size() > w.size()) return false;
  return w.substr(w.size() - suffix.size()) == suffix;
}

std::string_view stem_of(std::string_view w, std::string_view suffix) {
  return w.substr(0, w.size() - suffix.size());
}

void replace_suffix(std::string& w, std::string_view suffix,
                    std::string_view repl) {
  w.erase(w.size() - suffix.size());
  w += repl;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Within one rule set, only the longest matching suffix is considered;
// its condition then decides whether the replacement happens.
void apply_longest_match(std::string& w, std::span<const Rule> rules,
                         int min_measure) {
  const Rule* best = nullptr;
  for (const Rule& rule : rules) {
    if (ends_with(w, rule.suffix) &&
        (best == nullptr || rule.suffix.size() > best->suffix.size())) {
      best = &rule;
    }
  }
  if (best == nullptr) return;
  if (measure(stem_of(w, best->suffix)) > min_measure) {
    replace_suffix(w, best->suffix, best->replacement);
  }
}

// SSES -> SS, IES -> I, SS -> SS, S -> "".
void step1a(std::string& w) {
  if (ends_with(w, "sses")) {
    replace_suffix(w, "sses", "ss");
  } else if (ends_with(w, "ies")) {
    replace_suffix(w, "ies", "i");
  } else if (!ends_with(w, "ss") && ends_with(w, "s")) {
    w.pop_back();
  }
}

// (m>0) EED -> EE, else drop (*v*) ED / ING and tidy up the ending.
void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(stem_of(w, "eed")) > 0) w.pop_back();
    return;
  }
  bool removed = false;
  if (ends_with(w, "ed")) {
    if (contains_vowel(stem_of(w, "ed"))) {
      replace_suffix(w, "ed", "");
      removed = true;
    }
  } else if (ends_with(w, "ing")) {
    if (contains_vowel(stem_of(w, "ing"))) {
      replace_suffix(w, "ing", "");
      removed = true;
    }
  }
  if (!removed) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w += 'e';
  } else if (ends_double_consonant(w)) {
    const char last = w.back();
    if (last != 'l' && last != 's' && last != 'z') w.pop_back();
  } else if (measure(w) == 1 && ends_cvc(w)) {
    w += 'e';
  }
}

// (*v*) Y -> I.
void step1c(std::string& w) {
  if (ends_with(w, "y") && contains_vowel(stem_of(w, "y"))) {
    w.back() = 'i';
  }
}

// The reference implementation's rule list: BLI -> BLE in place of the
// originally published ABLI -> ABLE, plus LOGI -> LOG.
constexpr std::array<Rule, 21> kStep2Rules = {{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
    {"anci", "ance"},   {"izer", "ize"},    {"bli", "ble"},
    {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
    {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
    {"iviti", "ive"},   {"biliti", "ble"},  {"logi", "log"},
}};

constexpr std::array<Rule, 7> kStep3Rules = {{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<Rule, 18> kStep4Rules = {{
    {"al", ""},    {"ance", ""}, {"ence", ""}, {"er", ""},  {"ic", ""},
    {"able", ""},  {"ible", ""}, {"ant", ""},  {"ement", ""},
    {"ment", ""},  {"ent", ""},  {"ou", ""},   {"ism", ""}, {"ate", ""},
    {"iti", ""},   {"ous", ""},  {"ive", ""},  {"ize", ""},
}};

// (m>1) suffix -> "", with ION additionally requiring an S or T before it.
void step4(std::string& w) {
  const Rule* best = nullptr;
  for (const Rule& rule : kStep4Rules) {
    if (ends_with(w, rule.suffix) &&
        (best == nullptr || rule.suffix.size() > best->suffix.size())) {
      best = &rule;
    }
  }
  if (ends_with(w, "ion") && (best == nullptr || best->suffix.size() < 3)) {
    std::string_view stem = stem_of(w, "ion");
    if (!stem.empty() && (stem.back() == 's' || stem.back() == 't') &&
        measure(stem) > 1) {
      replace_suffix(w, "ion", "");
    }
    return;
  }
  if (best != nullptr && measure(stem_of(w, best->suffix)) > 1) {
    replace_suffix(w, best->suffix, "");
  }
}

// (m>1) E -> "", (m=1 and not *o) E -> "".
void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  std::string_view stem = stem_of(w, "e");
  const int m = measure(stem);
  if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
}

// (m>1 and *d and *L) -> single letter.
void step5b(std::string& w) {
  if (ends_with(w, "ll") && measure(w) > 1) w.pop_back();
}

void check_letters(std::string_view word) {
  if (word.empty()) throw InvalidWord("empty word");
  for (char c : word) {
    if (c < 'a' || c > 'z') {
      throw InvalidWord("word contains non-letter characters: " +
                        std::string(word));
    }
  }
}

}  // namespace

int porter_measure(std::string_view word) {
  check_letters(word);
  return measure(word);
}

std::string porter_stem(std::string_view word) {
  check_letters(word);
  std::string w(word);
  if (w.size() <= 2) return w;
  step1a(w);
  step1b(w);
  step1c(w);
  apply_longest_match(w, kStep2Rules, 0);
  apply_longest_match(w, kStep3Rules, 0);
  step4(w);
  step5a(w);
  step5b(w);
  return w;
}

}  // namespace ppmisum
