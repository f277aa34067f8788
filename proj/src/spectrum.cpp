#include "micz/spectrum.hpp"

#include <stdexcept>

namespace micz {

Rat delta_D(int D, const Rat& mu) {
  int n = D / 2;
  if (D % 2 == 0) return (n - 1) * mu;
  return (n - 1) * abs(mu) + mu * mu;
}

Rat c2_angular(int D, const Rat& mu, int l) {
  return paper_weight_Rl(D, mu, l)[0].casimir;
}

std::pair<Rat, Rat> indicial_roots(int D, const Rat& mu, int l) {
  Rat C = c2_angular(D, mu, l) - cbar2_value(D, mu) + delta_D(D, mu) +
          rat((D - 1) * (D - 3), 4);
  Rat disc = 1 + 4 * C, root;
  if (!rational_sqrt(disc, root))
    throw std::logic_error("indicial discriminant is not a perfect square");
  return {(1 + root) / 2, (1 - root) / 2};
}

RadialSolution radial_coeffs(int D, const Rat& mu, int k, int l) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  RadialSolution sol;
  sol.D = D;
  sol.mu = mu;
  sol.k = k;
  sol.l = l;
  sol.c2l = c2_angular(D, mu, l);
  sol.C = sol.c2l - cbar2_value(D, mu) + delta_D(D, mu) +
          rat((D - 1) * (D - 3), 4);
  sol.s = indicial_roots(D, mu, l).first;
  sol.lambda = Rat(1) / (k + sol.s - 1);
  sol.energy = -sol.lambda * sol.lambda / 2;
  sol.coeffs.assign(k, Rat(0));
  sol.coeffs[0] = 1;
  for (int m = 1; m < k; ++m)
    sol.coeffs[m] = 2 * (sol.lambda * (m + sol.s - 1) - 1) * sol.coeffs[m - 1] /
                    (Rat(m) * (m + 2 * sol.s - 1));
  return sol;
}

namespace {

// Finite series e^{-lambda r} sum_j c[j] r^{t+j} with rational exponent t.
struct ExpSeries {
  Rat lambda, t;
  std::vector<Rat> c;
};

ExpSeries deriv(const ExpSeries& f) {
  ExpSeries g{f.lambda, f.t - 1, std::vector<Rat>(f.c.size() + 1, Rat(0))};
  for (size_t j = 0; j < f.c.size(); ++j) {
    g.c[j] += (f.t + static_cast<long>(j)) * f.c[j];
    g.c[j + 1] -= f.lambda * f.c[j];
  }
  return g;
}

void accumulate(std::vector<Rat>& acc, Rat& acc_t, const ExpSeries& f,
                const Rat& scale, const Rat& shift) {
  // adds scale * r^shift * f, aligning exponents against acc_t
  Rat t = f.t + shift;
  if (acc.empty()) acc_t = t;
  Rat off = t - acc_t;
  if (!is_integer(off)) throw std::logic_error("exponent misalignment");
  long o = to_long(off);
  if (o < 0) {
    acc.insert(acc.begin(), -o, Rat(0));
    acc_t = t;
    o = 0;
  }
  if (acc.size() < f.c.size() + o) acc.resize(f.c.size() + o, Rat(0));
  for (size_t j = 0; j < f.c.size(); ++j) acc[j + o] += scale * f.c[j];
}

} // namespace

bool verify_radial_ode(const RadialSolution& sol) {
  // R = e^{-lambda r} r^{s-(D-1)/2} sum a_m r^m
  ExpSeries R{sol.lambda, sol.s - rat(sol.D - 1, 2), sol.coeffs};
  ExpSeries dR = deriv(R);
  // r^{D-1} dR, then differentiate, then scale by -(1/2) r^{1-D}
  ExpSeries inner = dR;
  inner.t += sol.D - 1;
  ExpSeries outer = deriv(inner);
  Rat C0 = sol.c2l - cbar2_value(sol.D, sol.mu) + delta_D(sol.D, sol.mu);
  std::vector<Rat> acc;
  Rat acc_t;
  accumulate(acc, acc_t, outer, Rat(-1, 2), Rat(1 - sol.D));
  accumulate(acc, acc_t, R, C0 / 2, Rat(-2));
  accumulate(acc, acc_t, R, Rat(-1), Rat(-1));
  accumulate(acc, acc_t, R, -sol.energy, Rat(0));
  for (const Rat& c : acc)
    if (c != 0) return false;
  return true;
}

namespace {

Rat energy_value(int D, const Rat& mu, int I) {
  int n = D / 2;
  Rat base = D % 2 == 1 ? Rat(I + n + abs(mu)) : Rat(I + n + mu - Rat(1, 2));
  return -Rat(1, 2) / (base * base);
}

} // namespace

LevelSpectrum energy_level(int D, const Rat& mu, int I) {
  if (I < 0) throw std::invalid_argument("I must be nonnegative");
  LevelSpectrum lev;
  lev.D = D;
  lev.mu = mu;
  lev.I = I;
  lev.energy = energy_value(D, mu, I);
  lev.irrep = paper_weight_HI(D, mu, I);
  lev.degeneracy = lev.irrep.dim;
  lev.consistent = true;
  long dim_sum = 0;
  for (int l = 0; l <= I; ++l) {
    Constituent c;
    c.k = I + 1 - l;
    c.l = l;
    c.irreps = paper_weight_Rl(D, mu, l);
    c.energy = radial_coeffs(D, mu, c.k, l).energy;
    for (const IrrepLabel& lab : c.irreps) dim_sum += lab.dim;
    if (c.energy != lev.energy) lev.consistent = false;
    lev.constituents.push_back(std::move(c));
  }
  if (dim_sum != lev.degeneracy) lev.consistent = false;
  return lev;
}

bool casimir_hamiltonian_check(int D, const Rat& mu, int I) {
  Rat c2 = paper_weight_HI(D, mu, I).casimir;
  Rat via_casimir =
      -Rat(1, 2) / (c2 + rat((D - 1) * (D - 1), 4) - cbar2_value(D, mu));
  return via_casimir == energy_value(D, mu, I);
}

std::vector<LevelSpectrum> level_table(int D, const Rat& mu, int Imax) {
  std::vector<LevelSpectrum> rows;
  for (int I = 0; I <= Imax; ++I) rows.push_back(energy_level(D, mu, I));
  return rows;
}

} // namespace micz
