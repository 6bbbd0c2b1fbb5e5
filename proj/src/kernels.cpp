#include "ppmisum/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ppmisum::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Shared by the serial and omp variants so their per-cell arithmetic is
// the same expression, evaluated in the same order.
inline double ppmi_cell_value(std::int32_t count, std::int64_t row_sum,
                              std::int64_t col_sum, std::int64_t total,
                              double floor) {
  if (count <= 0) return 0.0;
  const double p = std::log(static_cast<double>(count) *
                            static_cast<double>(total) /
                            (static_cast<double>(row_sum) *
                             static_cast<double>(col_sum)));
  return p > floor ? p : 0.0;
}

inline void ppmi_row(const CountMatrix& counts,
                     std::span<const std::int64_t> row_sums,
                     std::span<const std::int64_t> col_sums,
                     std::int64_t total, double floor, RealMatrix& out,
                     std::size_t i) {
  const std::size_t n = counts.cols();
  for (std::size_t j = 0; j < n; ++j) {
    out(i, j) = ppmi_cell_value(counts(i, j), row_sums[i], col_sums[j], total,
                                floor);
  }
}

inline double dot_row(const RealMatrix& m, std::size_t i,
                      std::span<const double> x) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
  return acc;
}

inline double dot_col(const RealMatrix& m, std::size_t j,
                      std::span<const double> x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, j) * x[i];
  return acc;
}

}  // namespace

void ppmi_transform_serial(const CountMatrix& counts,
                           std::span<const std::int64_t> row_sums,
                           std::span<const std::int64_t> col_sums,
                           std::int64_t total, double floor, RealMatrix& out) {
  for (std::size_t i = 0; i < counts.rows(); ++i) {
    ppmi_row(counts, row_sums, col_sums, total, floor, out, i);
  }
}

void ppmi_transform_omp(const CountMatrix& counts,
                        std::span<const std::int64_t> row_sums,
                        std::span<const std::int64_t> col_sums,
                        std::int64_t total, double floor, RealMatrix& out) {
#ifdef _OPENMP
  const std::int64_t rows = static_cast<std::int64_t>(counts.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    ppmi_row(counts, row_sums, col_sums, total, floor, out,
             static_cast<std::size_t>(i));
  }
#else
  ppmi_transform_serial(counts, row_sums, col_sums, total, floor, out);
#endif
}

void ppmi_transform(const CountMatrix& counts,
                    std::span<const std::int64_t> row_sums,
                    std::span<const std::int64_t> col_sums, std::int64_t total,
                    double floor, RealMatrix& out) {
  if (counts.size() >= kParallelGrain) {
    ppmi_transform_omp(counts, row_sums, col_sums, total, floor, out);
  } else {
    ppmi_transform_serial(counts, row_sums, col_sums, total, floor, out);
  }
}

void matvec_serial(const RealMatrix& m, std::span<const double> x,
                   std::span<double> y) {
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = dot_row(m, i, x);
}

void matvec_omp(const RealMatrix& m, std::span<const double> x,
                std::span<double> y) {
#ifdef _OPENMP
  const std::int64_t rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    y[i] = dot_row(m, static_cast<std::size_t>(i), x);
  }
#else
  matvec_serial(m, x, y);
#endif
}

void matvec(const RealMatrix& m, std::span<const double> x,
            std::span<double> y) {
  if (m.size() >= kParallelGrain) {
    matvec_omp(m, x, y);
  } else {
    matvec_serial(m, x, y);
  }
}

void tmatvec_serial(const RealMatrix& m, std::span<const double> x,
                    std::span<double> y) {
  for (std::size_t j = 0; j < m.cols(); ++j) y[j] = dot_col(m, j, x);
}

void tmatvec_omp(const RealMatrix& m, std::span<const double> x,
                 std::span<double> y) {
#ifdef _OPENMP
  const std::int64_t cols = static_cast<std::int64_t>(m.cols());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < cols; ++j) {
    y[j] = dot_col(m, static_cast<std::size_t>(j), x);
  }
#else
  tmatvec_serial(m, x, y);
#endif
}

void tmatvec(const RealMatrix& m, std::span<const double> x,
             std::span<double> y) {
  if (m.size() >= kParallelGrain) {
    tmatvec_omp(m, x, y);
  } else {
    tmatvec_serial(m, x, y);
  }
}

}  // namespace ppmisum::kernels
