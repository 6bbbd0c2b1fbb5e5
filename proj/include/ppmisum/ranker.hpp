#ifndef PPMISUM_RANKER_HPP
#define PPMISUM_RANKER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ppmisum/ppmi.hpp"
#include "ppmisum/text.hpp"
#include "ppmisum/tsm.hpp"

namespace ppmisum {

struct SentenceScore {
  std::size_t index = 0;
  double weight = 0.0;
};

// The selected extract: sentence indices ascending, original order kept.
struct Summary {
  std::vector<std::size_t> selected;
  std::string text;               // original sentences joined by newlines
  double percent_requested = 0.0;
  std::size_t count = 0;
};

// Weight of sentence k: the PPMI column sum times the sentence's share of
// the document's term occurrences. Throws DimensionMismatch when the two
// matrices disagree in shape.
std::vector<SentenceScore> score_sentences(const PpmiMatrix& ppmi,
                                           const TermSentenceMatrix& tsm);

// Picks the max(1, ceil(n * percent / 100)) heaviest sentences; ties go
// to the earlier sentence. Throws InvalidPercent unless percent is in
// (0, 100].
Summary select_summary(std::span<const SentenceScore> scores, double percent,
                       std::span<const SentenceRecord> sentences);

std::size_t summary_sentence_count(std::size_t n, double percent);

}  // namespace ppmisum

#endif  // PPMISUM_RANKER_HPP
