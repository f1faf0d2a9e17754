#pragma once

#include <cstddef>
#include <vector>

#include "entcert/exact.hpp"

namespace entcert {

/// Dense row-major matrix. Small sizes only (at most a few hundred entries
/// in every use in this library).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& v = a(r, k);
        if (v == T{}) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += v * b(k, c);
      }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using FloatMatrix = Matrix<ComplexFloat>;

ExactMatrix adjoint(const ExactMatrix& m);
bool is_zero(const ExactMatrix& m);
bool is_hermitian(const ExactMatrix& m);
FloatMatrix to_float(const ExactMatrix& m);

/// Rank over Q(i). Rows are cleared to Z[i] and then eliminated with
/// Bareiss' fraction-free scheme, first nonzero pivot.
std::size_t exact_rank(const ExactMatrix& m);

/// Basis of {x : m x = 0}, one column per basis vector, from the reduced
/// row echelon form (free variables set to unit vectors).
ExactMatrix null_space(const ExactMatrix& m);

/// Reduced row echelon form over Q(i); pivot columns appended to `pivots`.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);

}  // namespace entcert
