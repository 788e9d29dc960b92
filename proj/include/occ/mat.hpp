#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace occ {

// Row-major dense matrix with geometric capacity growth, so enlarging a Gram
// matrix by one row/column per insertion costs O(n) amortized instead of a
// full reallocation every time. Rows are contiguous (stride >= cols) and can
// feed the SIMD loops directly.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) { assign(rows, cols); }

  void assign(std::size_t rows, std::size_t cols, double value = 0.0) {
    rows_ = rows;
    cols_ = cols;
    stride_ = cols;
    data_.assign(rows * cols, value);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * stride_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * stride_ + j];
  }

  std::span<double> row(std::size_t i) {
    assert(i < rows_);
    return {data_.data() + i * stride_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    assert(i < rows_);
    return {data_.data() + i * stride_, cols_};
  }

  // Grows the logical size keeping existing entries; new cells are zero.
  void grow(std::size_t rows, std::size_t cols) {
    assert(rows >= rows_ && cols >= cols_);
    if (cols <= stride_ && rows * stride_ <= data_.size()) {
      rows_ = rows;
      cols_ = cols;
      return;
    }
    std::size_t new_stride = std::max(cols, stride_ + stride_ / 2 + 8);
    std::size_t cap_rows = std::max(rows, rows_ + rows_ / 2 + 8);
    std::vector<double> fresh(cap_rows * new_stride, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
      std::copy_n(data_.data() + i * stride_, cols_, fresh.data() + i * new_stride);
    data_ = std::move(fresh);
    stride_ = new_stride;
    rows_ = rows;
    cols_ = cols;
  }

  // Tightly packed copy (stride == cols) of the logical contents.
  Mat packed_copy() const {
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      std::copy_n(data_.data() + i * stride_, cols_, out.data_.data() + i * cols_);
    return out;
  }

 private:
  std::vector<double> data_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
};

}  // namespace occ
