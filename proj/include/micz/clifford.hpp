#pragma once

#include <optional>
#include <string>
#include <vector>

#include "micz/matrix.hpp"

namespace micz {

/// Gamma matrices of the Euclidean Clifford algebra Cl(d): d Hermitian
/// N x N matrices with {g_a, g_b} = 2 delta_ab, N = 2^ceil(d/2).
///
/// Construction convention (fixed for reproducibility): start from the Pauli
/// matrices sigma_x, sigma_y for d = 2 with chirality sigma_z; an odd set
/// appends the chirality of the even set below it; the step d -> d+2 maps
/// g_a -> sigma_x (x) g_a, adds sigma_x (x) chirality and sigma_y (x) Id, and
/// takes sigma_z (x) Id as the new chirality.  All entries lie in Q(i), and
/// every chirality matrix is diagonal with entries +/-1.
struct GammaSet {
  int d = 0;
  int N = 0;
  std::vector<Mat> gamma;           // gamma[a-1], 1-based indices in the API
  std::optional<Mat> chirality;     // present iff d is even
};

GammaSet build_gammas(int d);

/// gamma_ab = (i/4)[gamma_a, gamma_b]; 1-based a, b.
Mat gamma_ab(const GammaSet& g, int a, int b);

/// (1/2) sum_{a,b} gamma_ab gamma_ab.
Mat casimir_matrix(const GammaSet& g);

struct CommFailure {
  int a, b, c, d;
  std::string residual_entry;  // one nonzero residual entry, exact string
};

struct SoCommReport {
  bool pass = true;
  std::vector<CommFailure> failures;
};

/// Checks the so(d) commutator table on all index quadruples:
///   [gamma_ab, gamma_cd] = i gamma_ad d_bc - i gamma_bd d_ac
///                          + i gamma_ca d_bd - i gamma_cb d_ad.
SoCommReport verify_so_commutators(const GammaSet& g);

/// Same commutator table on an arbitrary family of antisymmetric generators
/// indexed by 1 <= a < b <= m; gen(a, b) must honor antisymmetry.
SoCommReport verify_so_commutators(int m, const std::vector<Mat>& gen_upper);

/// Index of the pair (a, b), a < b, in the canonical basis ordering of
/// antisymmetric generator labels for so(m).
int pair_index(int a, int b, int m);
int pair_count(int m);

} // namespace micz
