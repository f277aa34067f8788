#include "micz/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace micz {

Scalar::Scalar(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
               const Rat& s)
    : a_(a), b_(b), c_(c), d_(d), s_(s) {
  if (c_ == 0 && d_ == 0) {
    s_ = 0;
    return;
  }
  if (s_ <= 0) throw std::invalid_argument("radicand must be positive");
  Rat root;
  if (rational_sqrt(s_, root)) {
    a_ += c_ * root;
    b_ += d_ * root;
    c_ = 0;
    d_ = 0;
    s_ = 0;
  }
}

Scalar Scalar::sqrt_of(const Rat& s) { return Scalar(0, 0, 1, 0, s); }

Rat Scalar::to_rat() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + str());
  return a_;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.c_ = -c_;
  r.d_ = -d_;
  r.s_ = s_;
  return r;
}

Scalar Scalar::conj() const {
  Scalar r;
  r.a_ = a_;
  r.b_ = -b_;
  r.c_ = c_;
  r.d_ = -d_;
  r.s_ = s_;
  return r;
}

Rat merge_radicand(const Rat& s1, const Rat& s2) {
  if (s1 == 0) return s2;
  if (s2 == 0) return s1;
  if (s1 != s2)
    throw std::invalid_argument("mismatched radicands: " + rat_str(s1) + " vs " +
                                rat_str(s2));
  return s1;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  Rat s = merge_radicand(x.s_, y.s_);
  return Scalar(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_, s);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  Rat s = merge_radicand(x.s_, y.s_);
  return Scalar(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_, s);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  Rat s = merge_radicand(x.s_, y.s_);
  // (u1 + v1 sqrt(s)) (u2 + v2 sqrt(s)) with u, v complex rationals.
  // rational part: u1 u2 + v1 v2 s ; radical part: u1 v2 + v1 u2.
  Rat ra = x.a_ * y.a_ - x.b_ * y.b_ + (x.c_ * y.c_ - x.d_ * y.d_) * s;
  Rat rb = x.a_ * y.b_ + x.b_ * y.a_ + (x.c_ * y.d_ + x.d_ * y.c_) * s;
  Rat rc = x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ - x.d_ * y.b_;
  Rat rd = x.a_ * y.d_ + x.b_ * y.c_ + x.c_ * y.b_ + x.d_ * y.a_;
  return Scalar(ra, rb, rc, rd, s);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  // First clear sqrt(s) with the conjugate over sqrt(s):
  //   1/(u + v sqrt(s)) = (u - v sqrt(s)) / (u^2 - v^2 s),
  // the denominator being a nonzero complex rational (s is never a perfect
  // square here), then clear i with the complex conjugate.
  Rat wa = a_ * a_ - b_ * b_ - (c_ * c_ - d_ * d_) * s_;
  Rat wb = 2 * a_ * b_ - 2 * c_ * d_ * s_;
  Rat norm = wa * wa + wb * wb;
  if (norm == 0) throw std::domain_error("division by zero scalar");
  Rat ia = wa / norm, ib = -wb / norm;  // 1/(wa + wb i)
  Scalar num(a_, b_, -c_, -d_, s_);
  return num * Scalar::complex(ia, ib);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_ || x.c_ != y.c_ || x.d_ != y.d_)
    return false;
  // Radical components equal; radicands must agree unless both radical
  // parts vanish.
  if (x.c_ == 0 && x.d_ == 0) return true;
  return x.s_ == y.s_;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rat& q, const std::string& suffix) {
    if (q == 0) return;
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? "-" : "+");
    }
    first = false;
    os << rat_str(abs(q)) << suffix;
  };
  term(a_, "");
  term(b_, "*i");
  if (c_ != 0 || d_ != 0) {
    std::string rt = "*sqrt(" + rat_str(s_) + ")";
    term(c_, rt);
    term(d_, "*i" + rt);
  }
  return os.str();
}

} // namespace micz
