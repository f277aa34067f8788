#include "micz/matrix.hpp"

#include <stdexcept>

namespace micz {

namespace {
void check_same_shape(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix shape mismatch");
}
} // namespace

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_scalar_multiple_of_identity(Scalar& factor) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  factor = at(0, 0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (r == c ? at(r, c) != factor : !at(r, c).is_zero()) return false;
    }
  return true;
}

Mat Mat::conj_transpose() const {
  Mat m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Scalar Mat::trace() const {
  Scalar t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Mat operator+(const Mat& x, const Mat& y) {
  check_same_shape(x, y);
  Mat m(x.rows_, x.cols_);
  for (size_t i = 0; i < m.data_.size(); ++i)
    m.data_[i] = x.data_[i] + y.data_[i];
  return m;
}

Mat operator-(const Mat& x, const Mat& y) {
  check_same_shape(x, y);
  Mat m(x.rows_, x.cols_);
  for (size_t i = 0; i < m.data_.size(); ++i)
    m.data_[i] = x.data_[i] - y.data_[i];
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
  Mat m(x.rows_, y.cols_);
  for (int r = 0; r < x.rows_; ++r)
    for (int k = 0; k < x.cols_; ++k) {
      const Scalar& xk = x.at(r, k);
      if (xk.is_zero()) continue;
      for (int c = 0; c < y.cols_; ++c) {
        const Scalar& yk = y.at(k, c);
        if (yk.is_zero()) continue;
        m.at(r, c) += xk * yk;
      }
    }
  return m;
}

Mat operator*(const Scalar& k, const Mat& x) {
  Mat m(x.rows_, x.cols_);
  if (k.is_zero()) return m;
  for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = k * x.data_[i];
  return m;
}

Mat Mat::operator-() const {
  Mat m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
  return m;
}

bool operator==(const Mat& x, const Mat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
  for (size_t i = 0; i < x.data_.size(); ++i)
    if (x.data_[i] != y.data_[i]) return false;
  return true;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Scalar> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] += at(r, c) * v[c];
    }
  return out;
}

Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

Mat anticommutator(const Mat& x, const Mat& y) { return x * y + y * x; }

Mat kron(const Mat& x, const Mat& y) {
  Mat m(x.rows() * y.rows(), x.cols() * y.cols());
  for (int rx = 0; rx < x.rows(); ++rx)
    for (int cx = 0; cx < x.cols(); ++cx) {
      const Scalar& v = x.at(rx, cx);
      if (v.is_zero()) continue;
      for (int ry = 0; ry < y.rows(); ++ry)
        for (int cy = 0; cy < y.cols(); ++cy) {
          if (y.at(ry, cy).is_zero()) continue;
          m.at(rx * y.rows() + ry, cx * y.cols() + cy) = v * y.at(ry, cy);
        }
    }
  return m;
}

} // namespace micz
