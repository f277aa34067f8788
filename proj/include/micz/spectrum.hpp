#pragma once

#include <utility>
#include <vector>

#include "micz/repcalc.hpp"

namespace micz {

/// Bound-state radial solution R_{kl}(r) = e^{-lambda r} r^{s-(D-1)/2} p(r)
/// with p a polynomial of degree k-1.
struct RadialSolution {
  int D = 0;
  Rat mu;
  int k = 0;  // principal label, k >= 1
  int l = 0;  // angular label, l >= 0
  Rat c2l;    // c_2[so(D)] on the angular component
  Rat C;      // c2l - cbar2 + delta_D + (D-1)(D-3)/4, equals s(s-1)
  Rat s;      // admissible indicial exponent
  Rat lambda;
  Rat energy;               // E_{kl} = -(1/2) lambda^2
  std::vector<Rat> coeffs;  // a_0 = 1, ..., a_{k-1}
};

/// delta_D: (n-1) mu for D = 2n, (n-1)|mu| + mu^2 for D = 2n+1.
Rat delta_D(int D, const Rat& mu);

/// c_2[l]: quadratic Casimir of so(D) on the angular irrep(s) R_l.
Rat c2_angular(int D, const Rat& mu, int l);

/// Roots of s(s-1) = c2l - cbar2 + delta_D + (D-1)(D-3)/4; the first is the
/// square-integrable (admissible) one.  Both are exactly rational for
/// admissible (D, mu, l).
std::pair<Rat, Rat> indicial_roots(int D, const Rat& mu, int l);

/// Coefficients from a_0 = 1 and the recursion the radial equation imposes,
///   a_m (m)(m + 2s - 1) = 2 (lambda (m+s-1) - 1) a_{m-1},
/// with lambda = 1/(k+s-1); the series terminates at m = k.
RadialSolution radial_coeffs(int D, const Rat& mu, int k, int l);

/// Exact check that the solution satisfies the radial equation
///   -(1/(2 r^{D-1})) d_r r^{D-1} d_r R + ((c2l - cbar2 + delta)/(2r^2)) R
///     - R/r = E R
/// by direct substitution of the exponential-power series.
bool verify_radial_ode(const RadialSolution& sol);

struct Constituent {
  int k = 0;
  int l = 0;
  std::vector<IrrepLabel> irreps;  // R_l of Spin(D); a pair for even D, mu=1/2
  Rat energy;                      // E_{kl}, must equal the level energy
};

struct LevelSpectrum {
  int D = 0;
  Rat mu;
  int I = 0;
  Rat energy;        // E_I = -(1/2)/(I+n+|mu|)^2 resp. -(1/2)/(I+n+mu-1/2)^2
  IrrepLabel irrep;  // H_I of Spin(D+1)
  long degeneracy = 0;
  std::vector<Constituent> constituents;  // k+l = I+1
  bool consistent = false;  // constituent dims sum to the degeneracy and all
                            // constituent energies match
};

LevelSpectrum energy_level(int D, const Rat& mu, int I);

/// E_I == -(1/2)/(c_2[so(D+1)] + ((D-1)/2)^2 - cbar2) on the level irrep.
bool casimir_hamiltonian_check(int D, const Rat& mu, int I);

std::vector<LevelSpectrum> level_table(int D, const Rat& mu, int Imax);

} // namespace micz
