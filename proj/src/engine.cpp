#include "ppmisum/engine.hpp"

namespace ppmisum {

DocumentModel analyze_document(const RawDocument& raw,
                               const StopWordList& stoplist,
                               double ppmi_floor) {
  DocumentModel model;
  model.doc = preprocess_document(raw, stoplist);
  model.vocab = build_vocabulary(model.doc.sentences);
  model.tsm = build_tsm(model.doc.sentences, model.vocab);
  model.ppmi = compute_ppmi(model.tsm, ppmi_floor);
  model.scores = score_sentences(model.ppmi, model.tsm);
  return model;
}

Summary summarize(const DocumentModel& model, double percent) {
  return select_summary(model.scores, percent, model.doc.sentences);
}

}  // namespace ppmisum
