#ifndef PPMISUM_EVAL_HPP
#define PPMISUM_EVAL_HPP

#include <span>
#include <string>
#include <vector>

#include "ppmisum/engine.hpp"
#include "ppmisum/matrix.hpp"
#include "ppmisum/ppmi.hpp"

namespace ppmisum {

// Dominant left singular vector of a nonnegative matrix: unit length,
// sign-fixed so its entries sum to a nonnegative value.
struct MainTopicVector {
  std::vector<double> values;
};

struct EvalRow {
  double percent = 0.0;
  double cosine = 0.0;
};

struct EvaluationReport {
  std::string document_name;
  std::vector<EvalRow> rows;
  double average = 0.0;
};

inline constexpr double kPowerIterationTolerance = 1e-12;
inline constexpr int kPowerIterationCap = 10000;

// Alternating power iteration from a uniform start vector. Throws
// ZeroMatrix for an all-zero input and NoConvergence when the iteration
// cap is reached before successive iterates differ by less than the
// tolerance.
MainTopicVector dominant_left_singular_vector(const RealMatrix& m);

// Columns of the PPMI matrix at the selected sentence indices, in order.
// Throws IndexOutOfRange for an index >= the number of sentences.
RealMatrix build_summary_matrix(const PpmiMatrix& ppmi,
                                std::span<const std::size_t> selected);

// Cosine between the main topics of the document and of its extract.
// Throws ZeroSummaryMatrix when every selected PPMI column is zero.
double main_topic_cosine(const PpmiMatrix& ppmi,
                         std::span<const std::size_t> selected);

const std::vector<double>& default_sweep_percents();  // 10, 15, 20, 25, 30

// One (percent, cosine) row per requested percent plus their mean.
EvaluationReport evaluate_sweep(const DocumentModel& model,
                                std::span<const double> percents);
EvaluationReport evaluate_sweep(const DocumentModel& model);

}  // namespace ppmisum

#endif  // PPMISUM_EVAL_HPP
