// Compares the serial and OpenMP kernels on synthetic matrices and checks
// that both produce identical bytes. Build with the default targets; not
// registered as a test.
//
//   bench_kernels [rows cols repetitions]

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "ppmisum/kernels.hpp"
#include "ppmisum/matrix.hpp"

namespace kernels = ppmisum::kernels;
using ppmisum::CountMatrix;
using ppmisum::RealMatrix;

namespace {

double seconds_of(const std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

template <typename F>
double best_of(int repetitions, F&& body) {
  double best = 1e300;
  for (int r = 0; r < repetitions; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const double s = seconds_of(std::chrono::steady_clock::now() - start);
    if (s < best) best = s;
  }
  return best;
}

void report(const char* name, double serial_s, double omp_s, bool identical) {
  std::printf("%-16s serial %9.4f ms   parallel %9.4f ms   speedup %5.2fx   %s\n",
              name, serial_s * 1e3, omp_s * 1e3, serial_s / omp_s,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t rows = 3000;
  std::size_t cols = 2000;
  int repetitions = 5;
  if (argc > 1) rows = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
  if (argc > 2) cols = static_cast<std::size_t>(std::strtoull(argv[2], nullptr, 10));
  if (argc > 3) repetitions = std::atoi(argv[3]);
  if (rows == 0 || cols == 0 || repetitions <= 0) {
    std::fprintf(stderr, "usage: bench_kernels [rows cols repetitions]\n");
    return 2;
  }

  std::printf("kernel benchmark: %zu x %zu, best of %d, OpenMP %s, %d thread(s)\n\n",
              rows, cols, repetitions,
              kernels::openmp_enabled() ? "on" : "off", kernels::max_threads());

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> count_entry(0, 6);
  CountMatrix counts(rows, cols);
  std::vector<std::int64_t> row_sums(rows, 0);
  std::vector<std::int64_t> col_sums(cols, 0);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const int v = count_entry(rng);
      counts(i, j) = v;
      row_sums[i] += v;
      col_sums[j] += v;
      total += v;
    }
  }
  if (total == 0) counts(0, 0) = row_sums[0] = col_sums[0] = total = 1;

  RealMatrix out_serial(rows, cols);
  RealMatrix out_omp(rows, cols);
  const double ppmi_serial = best_of(repetitions, [&] {
    kernels::ppmi_transform_serial(counts, row_sums, col_sums, total, 0.0,
                                   out_serial);
  });
  const double ppmi_omp = best_of(repetitions, [&] {
    kernels::ppmi_transform_omp(counts, row_sums, col_sums, total, 0.0,
                                out_omp);
  });
  report("ppmi_transform", ppmi_serial, ppmi_omp, out_serial == out_omp);

  std::uniform_real_distribution<double> real_entry(0.0, 2.0);
  RealMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = real_entry(rng);
  std::vector<double> x(cols);
  for (double& v : x) v = real_entry(rng);
  std::vector<double> u(rows);
  for (double& v : u) v = real_entry(rng);

  std::vector<double> y_serial(rows);
  std::vector<double> y_omp(rows);
  const double mv_serial =
      best_of(repetitions, [&] { kernels::matvec_serial(m, x, y_serial); });
  const double mv_omp =
      best_of(repetitions, [&] { kernels::matvec_omp(m, x, y_omp); });
  report("matvec", mv_serial, mv_omp, y_serial == y_omp);

  std::vector<double> z_serial(cols);
  std::vector<double> z_omp(cols);
  const double tmv_serial =
      best_of(repetitions, [&] { kernels::tmatvec_serial(m, u, z_serial); });
  const double tmv_omp =
      best_of(repetitions, [&] { kernels::tmatvec_omp(m, u, z_omp); });
  report("tmatvec", tmv_serial, tmv_omp, z_serial == z_omp);

  const bool all_identical =
      out_serial == out_omp && y_serial == y_omp && z_serial == z_omp;
  return all_identical ? 0 : 1;
}
