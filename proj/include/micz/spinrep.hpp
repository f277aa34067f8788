#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "micz/clifford.hpp"
#include "micz/matrix.hpp"
#include "micz/repcalc.hpp"

namespace micz {

/// A concrete finite-dimensional representation of so(m): the generator
/// matrices M_ab for 1 <= a < b <= m together with the certified highest
/// weight.  All reps constructed here have the Cartan generators
/// H_j = -M_{2j-1,2j} diagonal, so weight bookkeeping is exact and cheap.
struct RepSO {
  AlgebraType algebra;
  int dim = 0;
  std::vector<Mat> gen;  // indexed by pair_index(a, b, m), a < b
  Weight highest_weight;

  int m() const { return algebra.m(); }
  /// M(a, b) with antisymmetry; zero for a == b.
  Mat M(int a, int b) const;
  Mat H(int j) const { return -M(2 * j - 1, 2 * j); }
  /// (1/2) sum_ab M_ab M_ab.
  Mat casimir() const;
  /// Index of the highest-weight basis vector.
  int top_index() const;
};

RepSO trivial_rep(int m);

/// Fundamental spinor representation of so(m) for odd m.
RepSO spinor_rep(int m);

/// Chiral halves s_+ and s_- of the spinor representation for even m.
std::pair<RepSO, RepSO> spinor_pair(int m);

/// so(m) vector representation, M_ab = i(E_ab - E_ba); used as an
/// out-of-family control (its Cartan generators are not diagonal, so it is
/// not a valid cartan_power input).
RepSO vector_rep(int m);

/// k-fold Young (Cartan) power: the cyclic submodule generated from
/// v_top^(x k) inside the k-fold tensor power under all lowering operators.
/// Certified against weyl_dim and a scalar Casimir.  Throws if the tensor
/// space exceeds `size_budget` dimensions.
RepSO cartan_power(const RepSO& rep, int k, int size_budget = 4096);

/// The monopole representation s^{2 mu} of so(m): for even m the Young power
/// of s_+ (mu >= 0) or s_- (mu < 0); for odd m the trivial rep (mu = 0) or
/// the spinor (mu = 1/2).
RepSO rep_s2mu(int m, const Rat& mu, int size_budget = 4096);

/// Cyclic submodule of the tensor product generated from top (x) top.
RepSO tensor_cyclic_top(const RepSO& x, const RepSO& y, int size_budget = 4096);

/// Root of so(2n) as a length-n vector with two entries in {-1, +1}.
using RootVec = std::vector<int>;

struct CartanBasis {
  int n = 0;
  std::vector<Mat> H;            // H[j-1] = -M_{2j-1,2j}
  std::map<RootVec, Mat> E;      // all roots +-e^j +- e^k

  const Mat& root_op(const RootVec& alpha) const;
  /// E_{-alpha^j} for the simple roots alpha^1..alpha^n of the D series.
  Mat simple_lowering(int j) const;
};

/// Cartan-Weyl basis of a D-series representation:
///   E_{eta e^j + eta' e^k} = -(1/2)(M_{2j-1,2k-1} + i eta M_{2j,2k-1}
///                            + i eta' M_{2j-1,2k} - eta eta' M_{2j,2k}).
CartanBasis cartan_basis(const RepSO& rep);

struct OOperators {
  Mat O, Odag, O1;
  Mat residual_sum_sq;    // sum_k (M_1k)^2 - (O1 + Odag + O)
  Mat residual_anticomm;  // sum_k {M_1k, M_2k} + 2i (Odag - O)
};

/// O = sum_{i>=2} E_{-e1-ei} E_{-e1+ei},
/// O1 = H1^2 + (1/2) sum_{i>=2} ({E_{-e1-ei}, E_{e1+ei}}
///                               + {E_{-e1+ei}, E_{e1-ei}}),
/// plus the two reduction residuals (expected zero in every representation).
OOperators build_O_operators(const RepSO& rep);

struct CheckItem {
  std::string what;
  bool pass = true;
  std::string residual;  // one offending exact entry when pass is false
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool pass() const;
};

/// O = 0, Odag = 0, O1 = mu(n+mu-1) Id = (c2/n) Id on a Young power of s_+/-.
CheckReport verify_claim(const RepSO& rep);

/// sum_k {M_ki, M_kj} = (delta_ij / n) sum_ab (M_ab)^2 on a rep of so(2n).
CheckReport verify_identity_odd(const RepSO& rep);

/// sum_k {g_ki, g_kj} = (n-1) delta_ij Id in the spinor rep of so(2n-1).
CheckReport verify_identity_even(int m);

/// The ladder-operator family O_k, O^k built from O1 by commutation with the
/// simple lowering operators, with all its commutation and annihilation
/// properties, including O^0 = 4i O.
CheckReport verify_ladder_properties(const RepSO& rep);

struct ProbeReport {
  bool residual_zero = false;
  std::string max_residual;  // an offending exact entry when nonzero
};

/// Residual of the anticommutator identity in an arbitrary so(2n) rep;
/// evidence gathering for the only-if direction of the closing conjecture.
ProbeReport conjecture_probe(const RepSO& rep);

} // namespace micz
