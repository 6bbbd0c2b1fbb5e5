#ifndef PPMISUM_PPMI_HPP
#define PPMISUM_PPMI_HPP

#include <cstdint>

#include "ppmisum/matrix.hpp"
#include "ppmisum/tsm.hpp"

namespace ppmisum {

// Positive pointwise mutual information weights of a term-sentence
// matrix. grand_total keeps the count total needed for sentence
// probabilities downstream.
struct PpmiMatrix {
  RealMatrix weights;
  std::int64_t grand_total = 0;

  std::size_t rows() const { return weights.rows(); }
  std::size_t cols() const { return weights.cols(); }
};

// Pointwise mutual information of one cell: log of the joint probability
// of term i and sentence j over the product of their marginals, natural
// log. Throws ZeroCell when F(i, j) = 0.
double pmi_cell(const TermSentenceMatrix& tsm, std::size_t i, std::size_t j);

// PMI with values at or below `floor` (and all zero-count cells) mapped
// to 0. floor = 0 is the plain positive clamp. Throws EmptyMatrix when
// every count is zero.
PpmiMatrix compute_ppmi(const TermSentenceMatrix& tsm, double floor = 0.0);

}  // namespace ppmisum

#endif  // PPMISUM_PPMI_HPP
