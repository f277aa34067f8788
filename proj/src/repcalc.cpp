#include "micz/repcalc.hpp"

#include <stdexcept>

namespace micz {

std::string AlgebraType::name() const { return "so(" + std::to_string(m()) + ")"; }

AlgebraType algebra_so(int m) {
  if (m < 2) throw std::invalid_argument("algebra_so requires m >= 2");
  if (m % 2 == 0) return {Series::D, m / 2};
  return {Series::B, (m - 1) / 2};
}

namespace {

std::vector<Rat> rho_vector(const AlgebraType& alg) {
  std::vector<Rat> rho(alg.rank);
  for (int i = 0; i < alg.rank; ++i) {
    if (alg.series == Series::B)
      rho[i] = Rat(alg.rank - i) - Rat(1, 2);
    else
      rho[i] = Rat(alg.rank - 1 - i);
  }
  return rho;
}

// Positive roots as sparse +/-1 pairs: (i, j, sign) encodes e_i + sign*e_j
// for i < j, and (i, -1, 0) encodes the short root e_i of the B series.
struct Root {
  int i, j, sign;
};

std::vector<Root> positive_roots(const AlgebraType& alg) {
  std::vector<Root> roots;
  for (int i = 0; i < alg.rank; ++i)
    for (int j = i + 1; j < alg.rank; ++j) {
      roots.push_back({i, j, -1});
      roots.push_back({i, j, +1});
    }
  if (alg.series == Series::B)
    for (int i = 0; i < alg.rank; ++i) roots.push_back({i, -1, 0});
  return roots;
}

Rat pair_with_root(const std::vector<Rat>& v, const Root& r) {
  if (r.j < 0) return v[r.i];
  return v[r.i] + Rat(r.sign) * v[r.j];
}

void check_weight(const AlgebraType& alg, const Weight& w) {
  if (w.rank() != alg.rank)
    throw std::invalid_argument("weight length does not match algebra rank");
  if (!is_dominant(alg, w))
    throw std::invalid_argument("weight is not dominant for " + alg.name());
}

} // namespace

bool is_dominant(const AlgebraType& alg, const Weight& w) {
  if (w.rank() != alg.rank) return false;
  const auto& e = w.entries;
  for (const Rat& x : e)
    if (!is_half_integer(x)) return false;
  for (int i = 1; i < alg.rank; ++i) {
    if (!is_integer(e[i] - e[0])) return false;  // same congruence class
  }
  for (int i = 0; i + 1 < alg.rank; ++i)
    if (e[i] < e[i + 1]) return false;
  if (alg.rank >= 1) {
    const Rat& last = e[alg.rank - 1];
    if (alg.series == Series::B && last < 0) return false;
    if (alg.series == Series::D && alg.rank >= 2 && e[alg.rank - 2] < abs(last))
      return false;
  }
  return true;
}

Rat casimir_value(const AlgebraType& alg, const Weight& w) {
  check_weight(alg, w);
  std::vector<Rat> rho = rho_vector(alg);
  Rat c = 0;
  for (int i = 0; i < alg.rank; ++i)
    c += w.entries[i] * (w.entries[i] + 2 * rho[i]);
  return c;
}

long weyl_dim(const AlgebraType& alg, const Weight& w) {
  check_weight(alg, w);
  std::vector<Rat> rho = rho_vector(alg);
  std::vector<Rat> lr(alg.rank);
  for (int i = 0; i < alg.rank; ++i) lr[i] = w.entries[i] + rho[i];
  Rat dim = 1;
  for (const Root& r : positive_roots(alg))
    dim *= pair_with_root(lr, r) / pair_with_root(rho, r);
  if (!is_integer(dim) || dim < 1)
    throw std::logic_error("Weyl dimension is not a positive integer");
  return to_long(dim);
}

IrrepLabel make_label(const AlgebraType& alg, const Weight& w) {
  return {alg, w, weyl_dim(alg, w), casimir_value(alg, w)};
}

bool mu_allowed(int D, const Rat& mu) {
  if (D < 3 || !is_half_integer(mu)) return false;
  if (D % 2 == 0) return mu == 0 || mu == Rat(1, 2);
  return true;
}

namespace {
void check_mu(int D, const Rat& mu) {
  if (!mu_allowed(D, mu))
    throw std::invalid_argument(
        "magnetic charge " + rat_str(mu) + " is not admissible in dimension " +
        std::to_string(D) +
        (D % 2 == 0 ? " (even dimensions require mu = 0 or 1/2)" : ""));
}
} // namespace

std::vector<IrrepLabel> paper_weight_Rl(int D, const Rat& mu, int l) {
  check_mu(D, mu);
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  if (D % 2 == 1) {
    int n = (D - 1) / 2;
    AlgebraType alg{Series::B, n};
    Weight w;
    w.entries.assign(n, abs(mu));
    w.entries[0] = l + abs(mu);
    return {make_label(alg, w)};
  }
  int n = D / 2;
  AlgebraType alg{Series::D, n};
  if (mu == 0) {
    Weight w;
    w.entries.assign(n, Rat(0));
    w.entries[0] = l;
    return {make_label(alg, w)};
  }
  Weight wp, wm;
  wp.entries.assign(n, Rat(1, 2));
  wp.entries[0] = l + Rat(1, 2);
  wm = wp;
  wm.entries[n - 1] = -Rat(1, 2);
  if (n == 1) {
    // so(2) is abelian: the pair degenerates to the two weights +/-(l+1/2).
    wm.entries[0] = -(l + Rat(1, 2));
  }
  return {make_label(alg, wp), make_label(alg, wm)};
}

IrrepLabel paper_weight_HI(int D, const Rat& mu, int I) {
  check_mu(D, mu);
  if (I < 0) throw std::invalid_argument("I must be nonnegative");
  if (D % 2 == 1) {
    int n = (D - 1) / 2;
    AlgebraType alg{Series::D, n + 1};
    Weight w;
    w.entries.assign(n + 1, abs(mu));
    w.entries[0] = I + abs(mu);
    w.entries[n] = mu;
    return make_label(alg, w);
  }
  int n = D / 2;
  AlgebraType alg{Series::B, n};
  Weight w;
  w.entries.assign(n, mu);
  w.entries[0] = I + mu;
  return make_label(alg, w);
}

BranchingReport branching_sum_check(int D, const Rat& mu, int I) {
  BranchingReport rep;
  rep.level_dim = paper_weight_HI(D, mu, I).dim;
  for (int l = 0; l <= I; ++l) {
    long dl = 0;
    for (const IrrepLabel& lab : paper_weight_Rl(D, mu, l)) dl += lab.dim;
    rep.constituent_dims.push_back(dl);
    rep.constituent_sum += dl;
  }
  rep.pass = rep.level_dim == rep.constituent_sum;
  return rep;
}

Rat cbar2_value(int D, const Rat& mu) {
  check_mu(D, mu);
  if (mu == 0) return Rat(0);
  if (D % 2 == 1) {
    int n = (D - 1) / 2;
    AlgebraType alg{Series::D, n};
    Weight w;
    w.entries.assign(n, abs(mu));
    w.entries[n - 1] = mu;
    return casimir_value(alg, w);
  }
  int n = D / 2;
  AlgebraType alg{Series::B, n - 1};
  Weight w;
  w.entries.assign(n - 1, mu);
  return casimir_value(alg, w);
}

} // namespace micz
