#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sph {

/// Small row-major matrix over an arbitrary ring-like scalar. The scalar need not be
/// default-constructible into a meaningful zero, so every constructor takes a fill value.
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix(int rows, int cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int i, int j) { return data_[index(i, j)]; }
  const Scalar& operator()(int i, int j) const { return data_[index(i, j)]; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_, data_.front());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  DenseMatrix map(F&& f) const {
    DenseMatrix out = *this;
    for (auto& x : out.data_) x = f(x);
    return out;
  }

  void swap_cols(int a, int b) {
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    DenseMatrix out(a.rows_, b.cols_, a.data_.front() - a.data_.front());
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        auto acc = a(i, 0) * b(0, j);
        for (int k = 1; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        out(i, j) = acc;
      }
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Scalar> data_;

  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
};

}  // namespace sph
