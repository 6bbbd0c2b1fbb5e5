#ifndef PPMISUM_MATRIX_HPP
#define PPMISUM_MATRIX_HPP

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace ppmisum {

// Dense row-major matrix. Sizes here are small (a few thousand terms by a
// few hundred sentences), so dense storage keeps the kernels simple and
// cache friendly.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T value = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CountMatrix = Matrix<std::int32_t>;
using RealMatrix = Matrix<double>;

}  // namespace ppmisum

#endif  // PPMISUM_MATRIX_HPP
