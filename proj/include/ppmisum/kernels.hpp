#ifndef PPMISUM_KERNELS_HPP
#define PPMISUM_KERNELS_HPP

#include <cstdint>
#include <span>

#include "ppmisum/matrix.hpp"

// Data-parallel inner loops of the engine. Every kernel exists in a
// _serial and an _omp form with identical semantics; the unsuffixed name
// dispatches on problem size. Each output element is computed by an
// independent serial loop in the same order in both forms, so the two
// variants produce bitwise-identical results.
namespace ppmisum::kernels {

// Work sizes below this run serially even when OpenMP is enabled.
inline constexpr std::size_t kParallelGrain = 1u << 16;

bool openmp_enabled();
int max_threads();

// out(i,j) = log(F(i,j) * total / (row_sums[i] * col_sums[j])) where
// F(i,j) > 0 and the log exceeds `floor`; 0 everywhere else.
void ppmi_transform_serial(const CountMatrix& counts,
                           std::span<const std::int64_t> row_sums,
                           std::span<const std::int64_t> col_sums,
                           std::int64_t total, double floor, RealMatrix& out);
void ppmi_transform_omp(const CountMatrix& counts,
                        std::span<const std::int64_t> row_sums,
                        std::span<const std::int64_t> col_sums,
                        std::int64_t total, double floor, RealMatrix& out);
void ppmi_transform(const CountMatrix& counts,
                    std::span<const std::int64_t> row_sums,
                    std::span<const std::int64_t> col_sums, std::int64_t total,
                    double floor, RealMatrix& out);

// y = M x, y.size() == M.rows(), x.size() == M.cols().
void matvec_serial(const RealMatrix& m, std::span<const double> x,
                   std::span<double> y);
void matvec_omp(const RealMatrix& m, std::span<const double> x,
                std::span<double> y);
void matvec(const RealMatrix& m, std::span<const double> x,
            std::span<double> y);

// y = M^T x, y.size() == M.cols(), x.size() == M.rows().
void tmatvec_serial(const RealMatrix& m, std::span<const double> x,
                    std::span<double> y);
void tmatvec_omp(const RealMatrix& m, std::span<const double> x,
                 std::span<double> y);
void tmatvec(const RealMatrix& m, std::span<const double> x,
             std::span<double> y);

}  // namespace ppmisum::kernels

#endif  // PPMISUM_KERNELS_HPP
