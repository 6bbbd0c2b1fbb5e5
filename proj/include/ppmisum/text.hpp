#ifndef PPMISUM_TEXT_HPP
#define PPMISUM_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ppmisum {

struct RawDocument {
  std::string name;
  std::string text;  // UTF-8
};

// One sentence after preprocessing. `tokens` holds every lowercase word in
// the sentence; `stems` holds what survives stop-word removal, stemmed
// (tokens containing digits pass through the stemmer untouched).
struct SentenceRecord {
  std::size_t index = 0;
  std::string original_text;
  std::vector<std::string> tokens;
  std::vector<std::string> stems;
};

class StopWordList {
 public:
  StopWordList() = default;
  explicit StopWordList(std::vector<std::string> words);

  // Built-in list of ~170 common English function words.
  static const StopWordList& default_list();

  bool contains(std::string_view word) const;
  void insert(std::string word);
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct PipelineStats {
  std::size_t sentence_count = 0;   // n
  std::size_t total_words = 0;      // tokens before elimination
  std::size_t unique_stems = 0;     // t
  int percent_eliminated = 0;       // round(100 * (1 - t / total_words))
};

struct PreprocessedDocument {
  std::string name;
  std::vector<SentenceRecord> sentences;
  PipelineStats stats;
};

// Splits a document into sentence strings. Sentence breaks are [.!?] runs
// followed by whitespace, with an abbreviation list and decimal-point
// guard; a first line without terminal punctuation (a title) and any
// paragraph without one become sentences of their own. Throws
// EmptyDocument when the text holds no word characters.
std::vector<std::string> split_sentences(std::string_view text);

// Maximal runs of ASCII alphanumerics, lowercased; everything else is a
// delimiter.
std::vector<std::string> tokenize(std::string_view sentence);

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopWordList& stoplist);

PreprocessedDocument preprocess_document(const RawDocument& doc,
                                         const StopWordList& stoplist);

int percent_eliminated(std::size_t total_words, std::size_t unique_stems);

}  // namespace ppmisum

#endif  // PPMISUM_TEXT_HPP
