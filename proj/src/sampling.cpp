#include "micz/sampling.hpp"

#include <random>

namespace micz {

namespace {

Rat small_rat(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi) {
  std::uniform_int_distribution<int> num(num_lo, num_hi);
  std::uniform_int_distribution<int> den(1, den_hi);
  return rat(num(rng), den(rng));
}

// Rational point of the sphere of rational radius R via stereographic
// projection of t in Q^{D-1}; always off the gauge string since
// r + x_0 = 2R/(1 + |t|^2) > 0.
std::vector<Rat> sphere_point(int D, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> radius_num(1, 5);
  std::uniform_int_distribution<int> radius_den(1, 3);
  Rat R = rat(radius_num(rng), radius_den(rng));
  std::vector<Rat> t(D - 1);
  Rat T = 0;
  for (Rat& ti : t) {
    ti = small_rat(rng, -3, 3, 3);
    T += ti * ti;
  }
  std::vector<Rat> x(D);
  Rat denom = 1 + T;
  x[0] = R * (1 - T) / denom;
  for (int a = 1; a < D; ++a) x[a] = 2 * R * t[a - 1] / denom;
  return x;
}

std::vector<Rat> integer_point(int D, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-4, 4);
  while (true) {
    std::vector<Rat> x(D);
    Rat rho = 0;
    for (Rat& xi : x) {
      xi = coord(rng);
      rho += xi * xi;
    }
    if (rho == 0) continue;
    Rat root;
    if (rational_sqrt(rho, root) && root + x[0] == 0) continue;
    return x;
  }
}

} // namespace

std::vector<FieldPoint> sample_points(int D, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * D));
  std::vector<FieldPoint> points;
  points.reserve(count);
  while (static_cast<int>(points.size()) < count) {
    std::vector<Rat> x = points.size() % 3 == 2 ? integer_point(D, rng)
                                                : sphere_point(D, rng);
    Rat rho = 0;
    for (const Rat& xi : x) rho += xi * xi;
    if (rho == 0) continue;
    points.emplace_back(x);
  }
  return points;
}

std::vector<std::vector<Poly>> sample_sections(int D, int dim, int count,
                                               int max_degree,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0xc2b2ae3d27d4eb4fULL * D) ^ dim);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> var(0, D - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<std::vector<Poly>> sections;
  sections.reserve(count);
  for (int s = 0; s < count; ++s) {
    std::vector<Poly> section(dim);
    // keep most components zero so the operator applications stay cheap
    std::uniform_int_distribution<int> comp(0, dim - 1);
    int filled = dim <= 2 ? dim : 2;
    for (int f = 0; f < filled; ++f) {
      Poly& poly = section[dim <= 2 ? f : comp(rng)];
      int k = nterms(rng);
      for (int t = 0; t < k; ++t) {
        PolyTerm term;
        term.exp.assign(D, 0);
        int d = deg(rng);
        for (int e = 0; e < d; ++e) term.exp[var(rng)] += 1;
        term.coef = small_rat(rng, -3, 3, 2);
        if (term.coef == 0) term.coef = 1;
        poly.push_back(term);
      }
    }
    sections.push_back(std::move(section));
  }
  return sections;
}

Jet poly_to_jet(const Poly& poly, const std::vector<Rat>& base, int order) {
  int D = static_cast<int>(base.size());
  Jet out(D, order);
  for (const PolyTerm& term : poly) {
    Jet mono = Jet::constant(D, order, Scalar(term.coef));
    for (int v = 0; v < D; ++v)
      for (int e = 0; e < term.exp[v]; ++e)
        mono = mono * Jet::coordinate(base, v, order);
    out += mono;
  }
  return out;
}

} // namespace micz
