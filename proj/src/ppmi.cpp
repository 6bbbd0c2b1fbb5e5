#include "ppmisum/ppmi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ppmisum/errors.hpp"
#include "ppmisum/kernels.hpp"

namespace ppmisum {

double pmi_cell(const TermSentenceMatrix& tsm, std::size_t i, std::size_t j) {
  if (i >= tsm.rows() || j >= tsm.cols()) {
    throw IndexOutOfRange("pmi_cell index (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") outside " +
                          std::to_string(tsm.rows()) + "x" +
                          std::to_string(tsm.cols()));
  }
  const std::int32_t count = tsm.counts(i, j);
  if (count <= 0) {
    throw ZeroCell("F(" + std::to_string(i) + ", " + std::to_string(j) +
                   ") is zero");
  }
  std::int64_t row_sum = 0;
  std::int64_t col_sum = 0;
  std::int64_t total = 0;
  for (std::size_t jj = 0; jj < tsm.cols(); ++jj) row_sum += tsm.counts(i, jj);
  for (std::size_t ii = 0; ii < tsm.rows(); ++ii) col_sum += tsm.counts(ii, j);
  for (std::size_t ii = 0; ii < tsm.rows(); ++ii) {
    for (std::size_t jj = 0; jj < tsm.cols(); ++jj) total += tsm.counts(ii, jj);
  }
  return std::log(static_cast<double>(count) * static_cast<double>(total) /
                  (static_cast<double>(row_sum) *
                   static_cast<double>(col_sum)));
}

PpmiMatrix compute_ppmi(const TermSentenceMatrix& tsm, double floor) {
  if (floor < 0.0) {
    throw std::invalid_argument("ppmi floor must be >= 0");
  }
  const std::vector<std::int64_t> row_sums = tsm.row_sums();
  const std::vector<std::int64_t> col_sums = tsm.col_sums();
  std::int64_t total = 0;
  for (std::int64_t s : row_sums) total += s;
  if (total == 0) {
    throw EmptyMatrix("all term-sentence counts are zero");
  }

  PpmiMatrix result;
  result.grand_total = total;
  result.weights = RealMatrix(tsm.rows(), tsm.cols(), 0.0);
  kernels::ppmi_transform(tsm.counts, row_sums, col_sums, total, floor,
                          result.weights);
  return result;
}

}  // namespace ppmisum
