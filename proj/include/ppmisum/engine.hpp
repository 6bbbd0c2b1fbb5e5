#ifndef PPMISUM_ENGINE_HPP
#define PPMISUM_ENGINE_HPP

#include <string>
#include <vector>

#include "ppmisum/ppmi.hpp"
#include "ppmisum/ranker.hpp"
#include "ppmisum/text.hpp"
#include "ppmisum/tsm.hpp"

namespace ppmisum {

// Everything derived from one document: the preprocessing record, the
// vocabulary and count matrix, the PPMI weights and the sentence scores.
struct DocumentModel {
  PreprocessedDocument doc;
  Vocabulary vocab;
  TermSentenceMatrix tsm;
  PpmiMatrix ppmi;
  std::vector<SentenceScore> scores;

  const std::string& name() const { return doc.name; }
  std::size_t sentence_count() const { return doc.sentences.size(); }
};

// Runs the full pipeline: split/tokenize/stem, vocabulary, counts, PPMI
// weighting, sentence scores.
DocumentModel analyze_document(const RawDocument& raw,
                               const StopWordList& stoplist,
                               double ppmi_floor = 0.0);

Summary summarize(const DocumentModel& model, double percent);

}  // namespace ppmisum

#endif  // PPMISUM_ENGINE_HPP
