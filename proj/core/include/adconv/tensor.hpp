#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace adconv {

// Dense rank-4 array in batch x channel x row x col layout, row-major with
// the column index fastest. All computation is in 64-bit floats; there is no
// broadcasting and no views, and every shape mismatch is fatal.
class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w);
  Tensor4(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w,
          std::vector<double> data);

  std::int64_t n() const { return n_; }
  std::int64_t c() const { return c_; }
  std::int64_t h() const { return h_; }
  std::int64_t w() const { return w_; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double at(std::int64_t n, std::int64_t c, std::int64_t i, std::int64_t j) const {
    return data_[index(n, c, i, j)];
  }
  double& at(std::int64_t n, std::int64_t c, std::int64_t i, std::int64_t j) {
    return data_[index(n, c, i, j)];
  }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }
  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }

  // Pointer to the contiguous h x w plane of one (batch, channel) pair.
  const double* plane(std::int64_t n, std::int64_t c) const {
    return data_.data() + (n * c_ + c) * h_ * w_;
  }
  double* plane(std::int64_t n, std::int64_t c) {
    return data_.data() + (n * c_ + c) * h_ * w_;
  }

  bool same_shape(const Tensor4& o) const {
    return n_ == o.n_ && c_ == o.c_ && h_ == o.h_ && w_ == o.w_;
  }
  bool all_finite() const;
  std::string shape_str() const;

 private:
  std::int64_t index(std::int64_t n, std::int64_t c, std::int64_t i, std::int64_t j) const {
    assert(n >= 0 && n < n_ && c >= 0 && c < c_ && i >= 0 && i < h_ && j >= 0 && j < w_);
    return ((n * c_ + c) * h_ + i) * w_ + j;
  }

  std::int64_t n_ = 0, c_ = 0, h_ = 0, w_ = 0;
  std::vector<double> data_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::int64_t rows, std::int64_t cols);
  Matrix(std::int64_t rows, std::int64_t cols, std::vector<double> data);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double at(std::int64_t r, std::int64_t c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[r * cols_ + c];
  }
  double& at(std::int64_t r, std::int64_t c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[r * cols_ + c];
  }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }
  const double* row(std::int64_t r) const { return data_.data() + r * cols_; }
  double* row(std::int64_t r) { return data_.data() + r * cols_; }
  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  bool all_finite() const;
  std::string shape_str() const;

 private:
  std::int64_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

// Per-(batch, channel) mean over the spatial plane; output is N x C.
Matrix global_avg_pool(const Tensor4& x);

// out = m * w + b broadcast per row. Inner dimensions must agree.
Matrix matmul_bias(const Matrix& m, const Matrix& w, std::span<const double> b);

// Elementwise max(0, x). The backward zeroes the gradient where the forward
// input was <= 0 (subgradient 0 at the kink).
Matrix relu(const Matrix& m);
Matrix relu_backward(const Matrix& input, const Matrix& grad_out);
Tensor4 relu(const Tensor4& x);
Tensor4 relu_backward(const Tensor4& input, const Tensor4& grad_out);

}  // namespace adconv
