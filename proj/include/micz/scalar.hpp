#pragma once

#include <string>

#include "micz/rational.hpp"

namespace micz {

/// Element of the field Q(i, sqrt(s)): (a + b*i) + (c + d*i)*sqrt(s) with a
/// single positive rational radicand s.  If s is a perfect square the radical
/// part folds into the rational part on construction, so pure Q(i) values
/// always have c = d = 0 and s = 0.  Values with c = d = 0 are
/// radicand-agnostic and mix freely with any extension.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), c_(0), d_(0), s_(0) {}
  Scalar(const Rat& a) : a_(a), b_(0), c_(0), d_(0), s_(0) {}
  Scalar(long a) : a_(a), b_(0), c_(0), d_(0), s_(0) {}
  Scalar(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& s);

  static Scalar complex(const Rat& re, const Rat& im) {
    return Scalar(re, im, 0, 0, 0);
  }
  static Scalar i() { return complex(0, 1); }
  /// sqrt(s) for rational s > 0 (collapses to a rational when possible).
  static Scalar sqrt_of(const Rat& s);

  const Rat& re() const { return a_; }
  const Rat& im() const { return b_; }
  const Rat& rad_re() const { return c_; }
  const Rat& rad_im() const { return d_; }
  const Rat& radicand() const { return s_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
  /// Rational value; throws unless is_rational().
  Rat to_rat() const;

  Scalar operator-() const;
  Scalar conj() const;  // complex conjugation, sqrt(s) fixed

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar inverse() const;

  /// Exact string: terms among "p/q", "p/q*i", "p/q*sqrt(s)", "p/q*i*sqrt(s)"
  /// joined by signs; "0" for zero.  Never a decimal.
  std::string str() const;

 private:
  Rat a_, b_, c_, d_, s_;
};

/// Shared radicand of two operands; throws on a genuine mismatch.
Rat merge_radicand(const Rat& s1, const Rat& s2);

} // namespace micz
