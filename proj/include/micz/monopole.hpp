#pragma once

#include <string>
#include <vector>

#include "micz/jet.hpp"
#include "micz/spinrep.hpp"

namespace micz {

/// Point of punctured D-space in gauge range: off the origin and off the
/// negative 0-th axis (r + x_0 != 0).  Coordinates are indexed the Greek
/// way: coord[0] = x_0, coord[a] = x_a for a = 1..D-1.
struct FieldPoint {
  int D = 0;
  std::vector<Rat> coord;
  Scalar r;

  explicit FieldPoint(std::vector<Rat> coords_greek);
};

/// Gauge potential and curvature of the generalized monopole are valued in
/// the Lie algebra so(D-1); away from products we carry them as coefficient
/// vectors over the generator basis {M_ab : a < b}, which makes every
/// commutator a structure-constant computation independent of the
/// representation size.  T is Scalar (pointwise) or Jet (for derivatives).
template <class T>
using AlgCoords = std::vector<T>;

/// Common evaluation data at one point: coordinates, r, 1/r, 1/(r+x_0).
template <class T>
struct FieldFrame {
  int D = 0;
  std::vector<T> x;
  T r, inv_r, inv_r_x0;
};

FieldFrame<Scalar> scalar_frame(const FieldPoint& p);
FieldFrame<Jet> jet_frame(const FieldPoint& p, int order);

namespace detail {

template <class T>
void add_pair(AlgCoords<T>& c, int a, int b, const T& v, int m) {
  if (a == b) return;
  if (a < b)
    c[pair_index(a, b, m)] += v;
  else
    c[pair_index(b, a, m)] -= v;
}

} // namespace detail

/// [X, Y] in generator coordinates via the so(m) commutator table.
template <class T>
AlgCoords<T> alg_bracket(const AlgCoords<T>& X, const AlgCoords<T>& Y, int m,
                         const T& zero) {
  AlgCoords<T> out(pair_count(m), zero);
  Scalar I = Scalar::i();
  int p = 0;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b, ++p) {
      if (X[p].is_zero()) continue;
      int q = 0;
      for (int c = 1; c <= m; ++c)
        for (int d = c + 1; d <= m; ++d, ++q) {
          if (Y[q].is_zero()) continue;
          T v = I * (X[p] * Y[q]);
          if (b == c) detail::add_pair(out, a, d, v, m);
          if (a == c) detail::add_pair(out, b, d, -v, m);
          if (b == d) detail::add_pair(out, a, c, -v, m);
          if (a == d) detail::add_pair(out, b, c, v, m);
        }
    }
  return out;
}

/// Coordinates of sum_c x_c M_cb.
template <class T>
AlgCoords<T> x_contract_coords(const FieldFrame<T>& f, int b, const T& zero) {
  int m = f.D - 1;
  AlgCoords<T> out(pair_count(m), zero);
  for (int c = 1; c <= m; ++c) {
    if (c == b) continue;
    detail::add_pair(out, c, b, f.x[c], m);
  }
  return out;
}

/// Gauge potential A_mu in generator coordinates: A_0 = 0 and
/// A_b = -(1/(r(r+x_0))) sum_a x_a M_ab.
template <class T>
AlgCoords<T> potential_coords(const FieldFrame<T>& f, int mu, const T& zero) {
  int m = f.D - 1;
  if (mu == 0) return AlgCoords<T>(pair_count(m), zero);
  AlgCoords<T> out = x_contract_coords(f, mu, zero);
  T w = -(f.inv_r * f.inv_r_x0);
  for (auto& c : out) c = w * c;
  return out;
}

/// Curvature F_{mu nu} in generator coordinates (closed forms):
///   F_{0b} = (1/r^3) sum_a x_a M_ab,
///   F_{ab} = -2 M_ab / (r(r+x_0))
///            + (1/(r^2 (r+x_0)^2)) ((2 + x_0/r) x_c (x_a M_cb - x_b M_ca)
///                                    + i x_d x_c [M_da, M_cb]).
template <class T>
AlgCoords<T> curvature_coords(const FieldFrame<T>& f, int mu, int nu,
                              const T& zero) {
  int m = f.D - 1;
  if (mu == nu) return AlgCoords<T>(pair_count(m), zero);
  if (mu == 0 || nu == 0) {
    int b = mu == 0 ? nu : mu;
    AlgCoords<T> out = x_contract_coords(f, b, zero);
    T w = f.inv_r * f.inv_r * f.inv_r;
    if (nu == 0) w = -w;
    for (auto& c : out) c = w * c;
    return out;
  }
  int a = mu, b = nu;
  AlgCoords<T> Pa = x_contract_coords(f, a, zero);
  AlgCoords<T> Pb = x_contract_coords(f, b, zero);
  AlgCoords<T> out(pair_count(m), zero);
  T w = f.inv_r * f.inv_r_x0;
  detail::add_pair(out, a, b, Scalar(-2) * w, m);
  T u = w * w;
  T two_x0r = Scalar(2) * f.r * f.inv_r + f.x[0] * f.inv_r;  // 2 + x_0/r
  AlgCoords<T> brk = alg_bracket(Pa, Pb, m, zero);
  for (int p = 0; p < pair_count(m); ++p) {
    T mid = two_x0r * (f.x[a] * Pb[p] - f.x[b] * Pa[p]) + Scalar::i() * brk[p];
    out[p] += u * mid;
  }
  return out;
}

/// Realizes generator coordinates as a matrix in the given representation.
Mat assemble(const RepSO& rep, const AlgCoords<Scalar>& coords);

struct FieldEval {
  int D = 0;
  std::vector<Mat> A;               // A[mu]
  std::vector<std::vector<Mat>> F;  // F[mu][nu], antisymmetric
};

FieldEval eval_potential(const RepSO& rep, const FieldPoint& p);

/// Fills both A and F.  The closed-form F is cross-validated on the fly
/// against dA + i[A, A] computed from order-1 jets of the potential (with
/// the commutator taken between the assembled matrices); a mismatch throws.
FieldEval eval_curvature(const RepSO& rep, const FieldPoint& p);

struct IdentityReport {
  std::string identity;
  int D = 0;
  Rat mu;  // representation charge when meaningful, else 0
  int points_checked = 0;
  bool pass = true;
  std::vector<std::string> max_residual_entries;
};

/// The four first-order field identities at the given points, in the given rep.
std::vector<IdentityReport> check_lemma_part1(const RepSO& rep, int D,
                                              const std::vector<FieldPoint>& points);

/// r^2 F_la F_lb = (c2/n)(d_ab/r^2 - x_a x_b/r^4) + i(n-1) F_ab on s^{2mu}
/// of so(2n), D = 2n+1.
IdentityReport check_lemma_part2(int n, const Rat& mu,
                                 const std::vector<FieldPoint>& points);

/// r^2 F_la F_lb = ((n-1)/2)(d_ab/r^2 - x_a x_b/r^4) + i(n-3/2) F_ab in the
/// spinor of so(2n-1), D = 2n.
IdentityReport check_lemma_part3(int n, const std::vector<FieldPoint>& points);

/// The part-3 identity form evaluated in an arbitrary rep of so(2n-1);
/// pass=false is the expected outcome for charges other than 0 or 1/2.
IdentityReport check_eq13_form(int n, const RepSO& rep,
                               const std::vector<FieldPoint>& points);

/// Closed-form curvature vs the jet-derived dA - dA + i[A, A], as matrices.
IdentityReport check_curvature_crosscheck(const RepSO& rep, int D,
                                          const std::vector<FieldPoint>& points);

} // namespace micz
