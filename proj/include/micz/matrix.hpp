#pragma once

#include <vector>

#include "micz/scalar.hpp"

namespace micz {

/// Dense matrix over Scalar.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(int n);
  static Mat zero(int n) { return Mat(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return data_[r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_scalar_multiple_of_identity(Scalar& factor) const;

  Mat conj_transpose() const;
  Mat transpose() const;
  Scalar trace() const;

  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator*(const Scalar& k, const Mat& x);
  Mat operator-() const;
  Mat& operator+=(const Mat& y) { return *this = *this + y; }
  Mat& operator-=(const Mat& y) { return *this = *this - y; }

  friend bool operator==(const Mat& x, const Mat& y);
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> data_;
};

Mat commutator(const Mat& x, const Mat& y);
Mat anticommutator(const Mat& x, const Mat& y);

/// Kronecker product.
Mat kron(const Mat& x, const Mat& y);

} // namespace micz
