#pragma once

#include <map>
#include <vector>

#include "micz/scalar.hpp"

namespace micz {

/// Multi-index over the jet variables; entries are nonnegative exponents.
using MIdx = std::vector<int>;

inline int midx_degree(const MIdx& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Truncated Taylor expansion of a function at a base point: coefficients of
/// the displacement monomials up to total degree `order` (order <= 4 in all
/// uses here).  Arithmetic is the exact truncated Leibniz calculus; the
/// product of two jets is known only to the smaller of the two orders.
class Jet {
 public:
  Jet() : nvars_(0), order_(0) {}
  Jet(int nvars, int order);

  static Jet constant(int nvars, int order, const Scalar& v);
  /// Jet of the coordinate function x_i at the given base point.
  static Jet coordinate(const std::vector<Rat>& base, int i, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }

  Scalar coeff(const MIdx& m) const;
  void set_coeff(const MIdx& m, const Scalar& v);
  /// Degree-0 coefficient, i.e. the value at the base point.
  Scalar value() const;

  const std::map<MIdx, Scalar>& coeffs() const { return c_; }

  bool is_zero() const;

  Jet truncated(int order) const;
  /// Partial derivative with respect to variable `var`; drops one order.
  Jet deriv(int var) const;

  Jet inverse() const;

  friend Jet operator+(const Jet& x, const Jet& y);
  friend Jet operator-(const Jet& x, const Jet& y);
  friend Jet operator*(const Jet& x, const Jet& y);
  friend Jet operator*(const Scalar& k, const Jet& x);
  Jet operator-() const;
  Jet& operator+=(const Jet& y) { return *this = *this + y; }
  Jet& operator-=(const Jet& y) { return *this = *this - y; }

  friend bool operator==(const Jet& x, const Jet& y);
  friend bool operator!=(const Jet& x, const Jet& y) { return !(x == y); }

 private:
  int nvars_, order_;
  std::map<MIdx, Scalar> c_;  // zero coefficients are not stored
};

/// Jet of r = sqrt(sum x_i^2) at a nonzero base point.  The radicand is
/// sum base_i^2; it collapses to a rational at perfect-square points.
Jet jet_of_radius(const std::vector<Rat>& base, int order);

Jet jet_pow(const Jet& x, int k);

} // namespace micz
