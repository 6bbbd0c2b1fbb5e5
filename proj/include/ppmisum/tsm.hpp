#ifndef PPMISUM_TSM_HPP
#define PPMISUM_TSM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppmisum/matrix.hpp"
#include "ppmisum/text.hpp"

namespace ppmisum {

// The t unique stems of a document, in first-occurrence order.
struct Vocabulary {
  std::vector<std::string> stems;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const { return stems.size(); }
};

// t x n matrix of raw term frequencies: counts(i, j) is how often stem i
// occurs in sentence j.
struct TermSentenceMatrix {
  CountMatrix counts;

  std::size_t rows() const { return counts.rows(); }
  std::size_t cols() const { return counts.cols(); }

  std::vector<std::int64_t> row_sums() const;
  std::vector<std::int64_t> col_sums() const;
  std::int64_t total() const;
};

// Throws EmptyVocabulary when no stems survived preprocessing.
Vocabulary build_vocabulary(std::span<const SentenceRecord> sentences);

// Throws UnknownStem when a sentence contains a stem missing from vocab.
TermSentenceMatrix build_tsm(std::span<const SentenceRecord> sentences,
                             const Vocabulary& vocab);

}  // namespace ppmisum

#endif  // PPMISUM_TSM_HPP
