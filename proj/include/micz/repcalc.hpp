#pragma once

#include <string>
#include <vector>

#include "micz/rational.hpp"

namespace micz {

/// Orthogonal Lie algebra series: B is so(2n+1), D is so(2n).
enum class Series { B, D };

struct AlgebraType {
  Series series;
  int rank;  // >= 1

  int m() const { return series == Series::B ? 2 * rank + 1 : 2 * rank; }
  std::string name() const;
};

/// so(m) for m >= 2.
AlgebraType algebra_so(int m);

struct Weight {
  std::vector<Rat> entries;

  int rank() const { return static_cast<int>(entries.size()); }
};

/// lambda_1 >= ... >= lambda_n >= 0 for B; lambda_1 >= ... >= |lambda_n| for
/// D; all entries congruent mod 1.  so(2) (D series, rank 1) is abelian and
/// any single half-integer entry is dominant.
bool is_dominant(const AlgebraType& alg, const Weight& w);

/// Quadratic Casimir value <lambda, lambda + 2 rho> in the Euclidean weight
/// coordinates; this normalization matches (1/2) sum_ab M_ab M_ab on the
/// generator side.
Rat casimir_value(const AlgebraType& alg, const Weight& w);

/// Weyl dimension formula, evaluated exactly.
long weyl_dim(const AlgebraType& alg, const Weight& w);

struct IrrepLabel {
  AlgebraType algebra;
  Weight highest_weight;
  long dim = 0;
  Rat casimir;
};

IrrepLabel make_label(const AlgebraType& alg, const Weight& w);

/// True iff mu is an admissible magnetic charge for dimension D: any half
/// integer for odd D; 0 or 1/2 for even D.
bool mu_allowed(int D, const Rat& mu);

/// The angular irrep(s) R_l of Spin(D) entering the bound-state expansion:
/// odd D: one label with weight (l+|mu|, |mu|, ..., |mu|);
/// even D, mu = 1/2: the pair (l+1/2, 1/2, ..., +/-1/2);
/// even D, mu = 0: one label (l, 0, ..., 0).
std::vector<IrrepLabel> paper_weight_Rl(int D, const Rat& mu, int l);

/// The level irrep H_I of Spin(D+1):
/// odd D: weight (I+|mu|, |mu|, ..., |mu|, mu); even D: (I+mu, mu, ..., mu).
IrrepLabel paper_weight_HI(int D, const Rat& mu, int I);

struct BranchingReport {
  long level_dim = 0;                 // dim H_I
  std::vector<long> constituent_dims; // dim R_l for l = 0..I (pairs summed)
  long constituent_sum = 0;
  bool pass = false;
};

/// dim H_I == sum_{l=0}^{I} dim R_l (with the +/- pair summed for even D,
/// mu = 1/2).
BranchingReport branching_sum_check(int D, const Rat& mu, int I);

/// Quadratic Casimir of so(D-1) on the monopole representation s^{2 mu}
/// (closed form; cross-checked against the generator matrices in tests).
Rat cbar2_value(int D, const Rat& mu);

} // namespace micz
