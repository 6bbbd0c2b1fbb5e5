#include "ppmisum/eval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ppmisum/errors.hpp"
#include "ppmisum/kernels.hpp"

namespace ppmisum {

namespace {

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

// Scales v to unit length; returns false when v is (numerically) zero.
bool normalize(std::vector<double>& v) {
  const double n = norm2(v);
  if (n == 0.0) return false;
  for (double& x : v) x /= n;
  return true;
}

void fix_sign(std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  if (sum < 0.0) {
    for (double& x : v) x = -x;
  }
}

bool all_zero(const RealMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

MainTopicVector dominant_left_singular_vector(const RealMatrix& m) {
  if (m.empty() || all_zero(m)) {
    throw ZeroMatrix("matrix has no nonzero entries");
  }
  const std::size_t t = m.rows();
  const std::size_t n = m.cols();

  std::vector<double> u(t, 1.0 / std::sqrt(static_cast<double>(t)));
  std::vector<double> v(n, 0.0);
  std::vector<double> next(t, 0.0);

  double residual = 0.0;
  for (int iter = 0; iter < kPowerIterationCap; ++iter) {
    kernels::tmatvec(m, u, v);  // v = M^T u
    if (!normalize(v)) {
      throw ZeroMatrix("iterate collapsed to zero");
    }
    kernels::matvec(m, v, next);  // u' = M v
    if (!normalize(next)) {
      throw ZeroMatrix("iterate collapsed to zero");
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
      const double d = next[i] - u[i];
      diff += d * d;
    }
    residual = std::sqrt(diff);
    u.swap(next);
    if (residual < kPowerIterationTolerance) {
      fix_sign(u);
      return MainTopicVector{std::move(u)};
    }
  }
  throw NoConvergence("power iteration hit the cap of " +
                      std::to_string(kPowerIterationCap) +
                      " iterations; last iterate change " +
                      std::to_string(residual));
}

RealMatrix build_summary_matrix(const PpmiMatrix& ppmi,
                                std::span<const std::size_t> selected) {
  if (selected.empty()) {
    throw IndexOutOfRange("no sentences selected");
  }
  for (std::size_t k = 0; k + 1 < selected.size(); ++k) {
    if (selected[k] >= selected[k + 1]) {
      throw IndexOutOfRange("selected indices must be strictly increasing");
    }
  }
  if (selected.back() >= ppmi.cols()) {
    throw IndexOutOfRange("sentence index " + std::to_string(selected.back()) +
                          " outside 0.." + std::to_string(ppmi.cols() - 1));
  }
  RealMatrix out(ppmi.rows(), selected.size());
  for (std::size_t i = 0; i < ppmi.rows(); ++i) {
    for (std::size_t k = 0; k < selected.size(); ++k) {
      out(i, k) = ppmi.weights(i, selected[k]);
    }
  }
  return out;
}

double main_topic_cosine(const PpmiMatrix& ppmi,
                         std::span<const std::size_t> selected) {
  const RealMatrix summary = build_summary_matrix(ppmi, selected);
  if (all_zero(summary)) {
    throw ZeroSummaryMatrix("every selected PPMI column is zero");
  }
  const MainTopicVector document_topic =
      dominant_left_singular_vector(ppmi.weights);
  const MainTopicVector summary_topic =
      dominant_left_singular_vector(summary);

  double dot = 0.0;
  for (std::size_t i = 0; i < document_topic.values.size(); ++i) {
    dot += document_topic.values[i] * summary_topic.values[i];
  }
  return std::clamp(dot, -1.0, 1.0);
}

const std::vector<double>& default_sweep_percents() {
  static const std::vector<double> kPercents = {10, 15, 20, 25, 30};
  return kPercents;
}

EvaluationReport evaluate_sweep(const DocumentModel& model,
                                std::span<const double> percents) {
  EvaluationReport report;
  report.document_name = model.name();
  report.rows.reserve(percents.size());
  double sum = 0.0;
  for (double percent : percents) {
    const Summary summary = summarize(model, percent);
    const double cosine = main_topic_cosine(model.ppmi, summary.selected);
    report.rows.push_back({percent, cosine});
    sum += cosine;
  }
  report.average = percents.empty() ? 0.0 : sum / static_cast<double>(percents.size());
  return report;
}

EvaluationReport evaluate_sweep(const DocumentModel& model) {
  return evaluate_sweep(model, default_sweep_percents());
}

}  // namespace ppmisum
