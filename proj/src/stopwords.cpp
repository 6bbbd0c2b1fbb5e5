#include <array>
#include <string_view>

#include "ppmisum/text.hpp"

namespace ppmisum {

namespace {

// Common English function words. Tokenization splits contractions at the
// apostrophe, so bare "s", "t" and "don" are listed too.
constexpr std::array<std::string_view, 180> kDefaultStopWords = {
    "a",          "about",      "above",      "across",     "after",
    "again",      "against",    "all",        "along",      "already",
    "also",       "although",   "always",     "am",         "among",
    "an",         "and",        "another",    "any",        "are",
    "around",     "as",         "at",         "be",         "because",
    "been",       "before",     "behind",     "being",      "below",
    "between",    "beyond",     "both",       "but",        "by",
    "can",        "could",      "despite",    "did",        "do",
    "does",       "doing",      "don",        "down",       "during",
    "each",       "either",     "even",       "ever",       "every",
    "except",     "few",        "for",        "from",       "further",
    "had",        "has",        "have",       "having",     "he",
    "her",        "here",       "hers",       "herself",    "him",
    "himself",    "his",        "how",        "however",    "i",
    "if",         "in",         "inside",     "into",       "is",
    "it",         "its",        "itself",     "just",       "least",
    "less",       "like",       "many",       "may",        "me",
    "might",      "more",       "most",       "much",       "must",
    "my",         "myself",     "near",       "neither",    "never",
    "no",         "nor",        "not",        "now",        "of",
    "off",        "often",      "on",         "once",       "only",
    "onto",       "or",         "other",      "others",     "ought",
    "our",        "ours",       "ourselves",  "out",        "outside",
    "over",       "own",        "per",        "s",          "same",
    "shall",      "she",        "should",     "since",      "so",
    "some",       "sometimes",  "still",      "such",       "t",
    "than",       "that",       "the",        "their",      "theirs",
    "them",       "themselves", "then",       "there",      "these",
    "they",       "this",       "those",      "though",     "through",
    "to",         "too",        "toward",     "towards",    "under",
    "unless",     "until",      "up",         "upon",       "us",
    "very",       "via",        "was",        "we",         "were",
    "what",       "when",       "where",      "whether",    "which",
    "while",      "who",        "whom",       "whose",      "why",
    "will",       "with",       "within",     "without",    "would",
    "yet",        "you",        "your",       "yours",      "yourself",
};

}  // namespace

StopWordList::StopWordList(std::vector<std::string> words) {
  for (std::string& w : words) words_.insert(std::move(w));
}

const StopWordList& StopWordList::default_list() {
  static const StopWordList kList = [] {
    StopWordList list;
    for (std::string_view w : kDefaultStopWords) list.insert(std::string(w));
    return list;
  }();
  return kList;
}

bool StopWordList::contains(std::string_view word) const {
  return words_.contains(std::string(word));
}

void StopWordList::insert(std::string word) { words_.insert(std::move(word)); }

}  // namespace ppmisum
