#include "ppmisum/ranker.hpp"

#include <algorithm>
#include <cmath>

#include "ppmisum/errors.hpp"

namespace ppmisum {

std::vector<SentenceScore> score_sentences(const PpmiMatrix& ppmi,
                                           const TermSentenceMatrix& tsm) {
  if (ppmi.rows() != tsm.rows() || ppmi.cols() != tsm.cols()) {
    throw DimensionMismatch(
        "ppmi is " + std::to_string(ppmi.rows()) + "x" +
        std::to_string(ppmi.cols()) + " but counts are " +
        std::to_string(tsm.rows()) + "x" + std::to_string(tsm.cols()));
  }
  const std::vector<std::int64_t> col_sums = tsm.col_sums();
  const double total = static_cast<double>(ppmi.grand_total);

  std::vector<SentenceScore> scores(ppmi.cols());
  for (std::size_t k = 0; k < ppmi.cols(); ++k) {
    double column_weight = 0.0;
    for (std::size_t i = 0; i < ppmi.rows(); ++i) {
      column_weight += ppmi.weights(i, k);
    }
    const double sentence_probability =
        static_cast<double>(col_sums[k]) / total;
    scores[k] = {k, column_weight * sentence_probability};
  }
  return scores;
}

std::size_t summary_sentence_count(std::size_t n, double percent) {
  const double exact = static_cast<double>(n) * percent / 100.0;
  const auto count = static_cast<std::size_t>(
      std::max(1.0, std::ceil(exact - 1e-9)));
  return std::min(count, n);
}

Summary select_summary(std::span<const SentenceScore> scores, double percent,
                       std::span<const SentenceRecord> sentences) {
  if (!(percent > 0.0) || percent > 100.0) {
    throw InvalidPercent("percent must be in (0, 100], got " +
                         std::to_string(percent));
  }
  if (scores.size() != sentences.size()) {
    throw DimensionMismatch("have " + std::to_string(scores.size()) +
                            " scores for " + std::to_string(sentences.size()) +
                            " sentences");
  }

  const std::size_t n = scores.size();
  Summary summary;
  summary.percent_requested = percent;
  summary.count = summary_sentence_count(n, percent);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a].weight != scores[b].weight) {
      return scores[a].weight > scores[b].weight;
    }
    return scores[a].index < scores[b].index;
  });

  summary.selected.reserve(summary.count);
  for (std::size_t i = 0; i < summary.count; ++i) {
    summary.selected.push_back(scores[order[i]].index);
  }
  std::sort(summary.selected.begin(), summary.selected.end());

  for (std::size_t i = 0; i < summary.selected.size(); ++i) {
    if (i > 0) summary.text += '\n';
    summary.text += sentences[summary.selected[i]].original_text;
  }
  return summary;
}

}  // namespace ppmisum
