#include "micz/jet.hpp"

#include <stdexcept>

namespace micz {

Jet::Jet(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars < 1) throw std::invalid_argument("jet needs at least one variable");
  if (order < 0 || order > 4)
    throw std::invalid_argument("jet order must be in 0..4");
}

Jet Jet::constant(int nvars, int order, const Scalar& v) {
  Jet j(nvars, order);
  j.set_coeff(MIdx(nvars, 0), v);
  return j;
}

Jet Jet::coordinate(const std::vector<Rat>& base, int i, int order) {
  Jet j(static_cast<int>(base.size()), order);
  j.set_coeff(MIdx(base.size(), 0), Scalar(base[i]));
  if (order >= 1) {
    MIdx m(base.size(), 0);
    m[i] = 1;
    j.set_coeff(m, Scalar(1));
  }
  return j;
}

Scalar Jet::coeff(const MIdx& m) const {
  auto it = c_.find(m);
  return it == c_.end() ? Scalar() : it->second;
}

void Jet::set_coeff(const MIdx& m, const Scalar& v) {
  if (static_cast<int>(m.size()) != nvars_ || midx_degree(m) > order_)
    throw std::invalid_argument("multi-index out of range for jet");
  if (v.is_zero())
    c_.erase(m);
  else
    c_[m] = v;
}

Scalar Jet::value() const { return coeff(MIdx(nvars_, 0)); }

bool Jet::is_zero() const {
  for (const auto& [m, v] : c_)
    if (!v.is_zero()) return false;
  return true;
}

Jet Jet::truncated(int order) const {
  if (order == order_) return *this;
  if (order > order_)
    throw std::invalid_argument("cannot raise jet order by truncation");
  Jet j(nvars_, order);
  for (const auto& [m, v] : c_)
    if (midx_degree(m) <= order) j.c_[m] = v;
  return j;
}

Jet Jet::deriv(int var) const {
  if (order_ < 1) throw std::invalid_argument("cannot differentiate order-0 jet");
  Jet j(nvars_, order_ - 1);
  for (const auto& [m, v] : c_) {
    if (m[var] == 0) continue;
    MIdx mm = m;
    mm[var] -= 1;
    j.c_[mm] = Scalar(Rat(m[var])) * v;
  }
  return j;
}

namespace {
void check_compatible(const Jet& x, const Jet& y) {
  if (x.nvars() != y.nvars())
    throw std::invalid_argument("jet variable-count mismatch");
}
} // namespace

Jet operator+(const Jet& x, const Jet& y) {
  check_compatible(x, y);
  int order = std::min(x.order(), y.order());
  Jet j(x.nvars(), order);
  for (const auto& [m, v] : x.coeffs())
    if (midx_degree(m) <= order) j.set_coeff(m, v);
  for (const auto& [m, v] : y.coeffs()) {
    if (midx_degree(m) > order) continue;
    j.set_coeff(m, j.coeff(m) + v);
  }
  return j;
}

Jet operator-(const Jet& x, const Jet& y) { return x + (-y); }

Jet Jet::operator-() const {
  Jet j(nvars_, order_);
  for (const auto& [m, v] : c_) j.c_[m] = -v;
  return j;
}

Jet operator*(const Jet& x, const Jet& y) {
  check_compatible(x, y);
  int order = std::min(x.order(), y.order());
  Jet j(x.nvars(), order);
  std::map<MIdx, Scalar> acc;
  for (const auto& [mx, vx] : x.coeffs()) {
    int dx = midx_degree(mx);
    if (dx > order) continue;
    for (const auto& [my, vy] : y.coeffs()) {
      if (dx + midx_degree(my) > order) continue;
      MIdx m(x.nvars());
      for (int i = 0; i < x.nvars(); ++i) m[i] = mx[i] + my[i];
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), vx * vy);
      else
        it->second += vx * vy;
    }
  }
  for (const auto& [m, v] : acc)
    if (!v.is_zero()) j.set_coeff(m, v);
  return j;
}

Jet operator*(const Scalar& k, const Jet& x) {
  Jet j(x.nvars(), x.order());
  if (k.is_zero()) return j;
  for (const auto& [m, v] : x.coeffs()) j.set_coeff(m, k * v);
  return j;
}

bool operator==(const Jet& x, const Jet& y) {
  if (x.nvars() != y.nvars() || x.order() != y.order()) return false;
  // Stored maps may differ in explicit zeros; compare via difference.
  for (const auto& [m, v] : x.coeffs())
    if (y.coeff(m) != v) return false;
  for (const auto& [m, v] : y.coeffs())
    if (x.coeff(m) != v) return false;
  return true;
}

Jet Jet::inverse() const {
  Scalar c0 = value();
  if (c0.is_zero())
    throw std::domain_error("jet inverse: vanishing leading coefficient");
  Scalar c0inv = c0.inverse();
  Jet u = c0inv * *this - Jet::constant(nvars_, order_, Scalar(1));
  // 1/(1+u) = 1 - u + u^2 - ... ; u has no constant term so the series
  // terminates at the truncation order.
  Jet acc = Jet::constant(nvars_, order_, Scalar(1));
  for (int k = 0; k < order_; ++k)
    acc = Jet::constant(nvars_, order_, Scalar(1)) - u * acc;
  return c0inv * acc;
}

Jet jet_of_radius(const std::vector<Rat>& base, int order) {
  int n = static_cast<int>(base.size());
  Rat s = 0;
  for (const Rat& b : base) s += b * b;
  if (s == 0) throw std::invalid_argument("jet_of_radius: zero base point");
  Jet rho(n, order);
  for (int i = 0; i < n; ++i) {
    Jet xi = Jet::coordinate(base, i, order);
    rho += xi * xi;
  }
  // r = sqrt(s) * sqrt(1 + u) with u = rho/s - 1 free of constant term;
  // binomial series for sqrt truncates exactly at the jet order.
  Jet u = Scalar(Rat(1) / s) * rho - Jet::constant(n, order, Scalar(1));
  Jet sum = Jet::constant(n, order, Scalar(1));
  Jet upow = Jet::constant(n, order, Scalar(1));
  Rat coef = 1;
  for (int k = 1; k <= order; ++k) {
    coef *= (Rat(1, 2) - (k - 1)) / k;
    upow = upow * u;
    sum += Scalar(coef) * upow;
  }
  return Scalar::sqrt_of(s) * sum;
}

Jet jet_pow(const Jet& x, int k) {
  Jet r = Jet::constant(x.nvars(), x.order(), Scalar(1));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

} // namespace micz
