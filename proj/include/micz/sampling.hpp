#pragma once

#include <cstdint>
#include <vector>

#include "micz/jet.hpp"
#include "micz/monopole.hpp"

namespace micz {

/// Deterministic sample of admissible field points in dimension D.  Roughly
/// two thirds are rational points of rational spheres (built by stereographic
/// projection, so r is exactly rational there) and the rest are generic
/// integer points whose radius lives in a genuine quadratic extension.
std::vector<FieldPoint> sample_points(int D, int count, std::uint64_t seed);

/// A polynomial in the D coordinates with rational coefficients; exactly
/// representable as a jet of any order.
struct PolyTerm {
  std::vector<int> exp;  // one exponent per variable
  Rat coef;
};
using Poly = std::vector<PolyTerm>;

/// Deterministic sample of `count` polynomial sections with `dim` components
/// of total degree <= max_degree.
std::vector<std::vector<Poly>> sample_sections(int D, int dim, int count,
                                               int max_degree,
                                               std::uint64_t seed);

Jet poly_to_jet(const Poly& poly, const std::vector<Rat>& base, int order);

} // namespace micz
