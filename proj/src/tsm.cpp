#include "ppmisum/tsm.hpp"

#include <numeric>

#include "ppmisum/errors.hpp"

namespace ppmisum {

std::vector<std::int64_t> TermSentenceMatrix::row_sums() const {
  std::vector<std::int64_t> sums(rows(), 0);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) sums[i] += counts(i, j);
  }
  return sums;
}

std::vector<std::int64_t> TermSentenceMatrix::col_sums() const {
  std::vector<std::int64_t> sums(cols(), 0);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) sums[j] += counts(i, j);
  }
  return sums;
}

std::int64_t TermSentenceMatrix::total() const {
  const auto sums = row_sums();
  return std::accumulate(sums.begin(), sums.end(), std::int64_t{0});
}

Vocabulary build_vocabulary(std::span<const SentenceRecord> sentences) {
  Vocabulary vocab;
  for (const SentenceRecord& sentence : sentences) {
    for (const std::string& stem : sentence.stems) {
      if (vocab.index.emplace(stem, vocab.stems.size()).second) {
        vocab.stems.push_back(stem);
      }
    }
  }
  if (vocab.stems.empty()) {
    throw EmptyVocabulary("no stems survived preprocessing");
  }
  return vocab;
}

TermSentenceMatrix build_tsm(std::span<const SentenceRecord> sentences,
                             const Vocabulary& vocab) {
  TermSentenceMatrix tsm;
  tsm.counts = CountMatrix(vocab.size(), sentences.size(), 0);
  for (std::size_t j = 0; j < sentences.size(); ++j) {
    for (const std::string& stem : sentences[j].stems) {
      const auto it = vocab.index.find(stem);
      if (it == vocab.index.end()) {
        throw UnknownStem("stem not present in vocabulary: " + stem);
      }
      ++tsm.counts(it->second, j);
    }
  }
  return tsm;
}

}  // namespace ppmisum
