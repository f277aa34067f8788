#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "micz/repcalc.hpp"

using namespace micz;

namespace {

using Vec = std::vector<Rat>;

Rat dot(const Vec& x, const Vec& y) {
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vec add_k(const Vec& x, const Vec& y, int k) {
  Vec out = x;
  for (size_t i = 0; i < x.size(); ++i) out[i] += k * y[i];
  return out;
}

// Freudenthal's recursion: an independent dimension oracle that never touches
// the Weyl dimension formula.
long freudenthal_dim(const AlgebraType& alg, const Weight& w) {
  int n = alg.rank;
  std::vector<Vec> pos, simple;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec a(n, Rat(0)), b(n, Rat(0));
      a[i] = 1; a[j] = -1;
      b[i] = 1; b[j] = 1;
      pos.push_back(a);
      pos.push_back(b);
    }
  if (alg.series == Series::B)
    for (int i = 0; i < n; ++i) {
      Vec a(n, Rat(0));
      a[i] = 1;
      pos.push_back(a);
    }
  for (int i = 0; i + 1 < n; ++i) {
    Vec a(n, Rat(0));
    a[i] = 1; a[i + 1] = -1;
    simple.push_back(a);
  }
  if (alg.series == Series::B) {
    Vec a(n, Rat(0));
    a[n - 1] = 1;
    simple.push_back(a);
  } else if (n >= 2) {
    Vec a(n, Rat(0));
    a[n - 2] = 1; a[n - 1] = 1;
    simple.push_back(a);
  }
  Vec rho(n, Rat(0));
  for (const Vec& a : pos)
    for (int i = 0; i < n; ++i) rho[i] += a[i] / 2;

  Vec lam = w.entries;
  Rat top = dot(add_k(lam, rho, 1), add_k(lam, rho, 1));
  std::map<Vec, Rat> mult;
  mult[lam] = 1;
  std::vector<std::vector<Vec>> levels{{lam}};
  long dim = 1;
  for (int h = 1;; ++h) {
    std::map<Vec, bool> cand;
    for (const Vec& v : levels[h - 1])
      for (const Vec& s : simple) cand[add_k(v, s, -1)] = true;
    std::vector<Vec> level;
    for (const auto& [mu, ignored] : cand) {
      Rat denom = top - dot(add_k(mu, rho, 1), add_k(mu, rho, 1));
      if (denom <= 0) continue;
      Rat numer = 0;
      for (const Vec& a : pos)
        for (int k = 1; k <= h; ++k) {
          auto it = mult.find(add_k(mu, a, k));
          if (it != mult.end()) numer += 2 * it->second * dot(it->first, a);
        }
      Rat m = numer / denom;
      if (m > 0) {
        mult[mu] = m;
        level.push_back(mu);
        dim += to_long(m);
      }
    }
    if (level.empty()) return dim;
    levels.push_back(std::move(level));
  }
}

} // namespace

TEST_CASE("algebra types and dominance") {
  CHECK(algebra_so(7).series == Series::B);
  CHECK(algebra_so(7).rank == 3);
  CHECK(algebra_so(6).series == Series::D);
  CHECK(algebra_so(6).m() == 6);
  CHECK(is_dominant(algebra_so(6), Weight{{2, 1, -1}}));
  CHECK_FALSE(is_dominant(algebra_so(7), Weight{{2, 1, -1}}));
  CHECK_FALSE(is_dominant(algebra_so(6), Weight{{1, rat(1, 2), 0}}));
}

TEST_CASE("casimir values") {
  // so(3): l(l+1)
  CHECK(casimir_value(algebra_so(3), Weight{{2}}) == Rat(6));
  CHECK(casimir_value(algebra_so(3), Weight{{rat(1, 2)}}) == rat(3, 4));
  // so(6) on s^2 (mu=1): n mu^2 + n(n-1)|mu| = 3 + 6 = 9
  CHECK(casimir_value(algebra_so(6), Weight{{1, 1, 1}}) == Rat(9));
  CHECK(casimir_value(algebra_so(5), Weight{{0, 0}}) == Rat(0));
  // so(2) is abelian: casimir is mu^2
  CHECK(casimir_value(algebra_so(2), Weight{{rat(3, 2)}}) == rat(9, 4));
}

TEST_CASE("weyl dimensions") {
  CHECK(weyl_dim(algebra_so(4), Weight{{rat(3, 2), rat(1, 2)}}) == 6);
  CHECK(weyl_dim(algebra_so(5), Weight{{rat(1, 2), rat(1, 2)}}) == 4);
  CHECK(weyl_dim(algebra_so(7), Weight{{0, 0, 0}}) == 1);
  // so(4): (p+q+1)(p-q+1)
  for (int twop = 0; twop <= 4; ++twop)
    for (int twoq = -twop; twoq <= twop; twoq += 2) {
      Weight w{{rat(twop, 2), rat(twoq, 2)}};
      CHECK(weyl_dim(algebra_so(4), w) ==
            to_long((w.entries[0] + w.entries[1] + 1) *
                    (w.entries[0] - w.entries[1] + 1)));
    }
}

TEST_CASE("weyl dimension agrees with the Freudenthal oracle") {
  for (int twoa = 0; twoa <= 4; ++twoa)
    for (int twob = -twoa; twob <= twoa; twob += 2) {
      Weight w{{rat(twoa, 2), rat(twob, 2)}};
      CHECK(weyl_dim(algebra_so(4), w) == freudenthal_dim(algebra_so(4), w));
      if (twob >= 0)
        CHECK(weyl_dim(algebra_so(5), w) == freudenthal_dim(algebra_so(5), w));
    }
  for (int twoa = 0; twoa <= 4; ++twoa)
    for (int twob = twoa % 2; twob <= twoa; twob += 2)
      for (int twoc = -twob; twoc <= twob; twoc += 2) {
        Weight w{{rat(twoa, 2), rat(twob, 2), rat(twoc, 2)}};
        CHECK(weyl_dim(algebra_so(6), w) == freudenthal_dim(algebra_so(6), w));
      }
}

TEST_CASE("mu admissibility") {
  CHECK(mu_allowed(5, rat(-3, 2)));
  CHECK(mu_allowed(7, Rat(2)));
  CHECK_FALSE(mu_allowed(5, rat(1, 3)));
  CHECK(mu_allowed(4, Rat(0)));
  CHECK(mu_allowed(6, rat(1, 2)));
  CHECK_FALSE(mu_allowed(4, Rat(1)));
  CHECK_FALSE(mu_allowed(6, rat(-1, 2)));
}

TEST_CASE("angular irreps R_l") {
  auto r1 = paper_weight_Rl(3, Rat(0), 1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].highest_weight.entries == std::vector<Rat>{Rat(1)});
  CHECK(r1[0].dim == 3);
  CHECK(r1[0].casimir == Rat(2));

  auto r2 = paper_weight_Rl(3, rat(1, 2), 0);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].dim == 2);

  auto r3 = paper_weight_Rl(4, rat(1, 2), 0);
  REQUIRE(r3.size() == 2);
  CHECK(r3[0].highest_weight.entries == std::vector<Rat>{rat(1, 2), rat(1, 2)});
  CHECK(r3[1].highest_weight.entries ==
        std::vector<Rat>{rat(1, 2), rat(-1, 2)});
  CHECK(r3[0].dim == 2);
  CHECK(r3[1].dim == 2);

  auto r4 = paper_weight_Rl(4, Rat(0), 2);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].highest_weight.entries == std::vector<Rat>{2, 0});
}

TEST_CASE("level irreps H_I") {
  IrrepLabel h1 = paper_weight_HI(3, Rat(0), 2);
  CHECK(h1.highest_weight.entries == std::vector<Rat>{2, 0});
  CHECK(h1.dim == 9);

  IrrepLabel h2 = paper_weight_HI(3, rat(1, 2), 1);
  CHECK(h2.highest_weight.entries == std::vector<Rat>{rat(3, 2), rat(1, 2)});
  CHECK(h2.dim == 6);

  IrrepLabel h3 = paper_weight_HI(4, Rat(0), 1);
  CHECK(h3.highest_weight.entries == std::vector<Rat>{1, 0});
  CHECK(h3.dim == 5);

  // signed last entry for negative charge
  IrrepLabel h4 = paper_weight_HI(5, rat(-1, 2), 0);
  CHECK(h4.highest_weight.entries ==
        std::vector<Rat>{rat(1, 2), rat(1, 2), rat(-1, 2)});
}

TEST_CASE("branching sums") {
  BranchingReport b1 = branching_sum_check(3, rat(1, 2), 2);
  CHECK(b1.pass);
  CHECK(b1.level_dim == 12);
  CHECK(b1.constituent_dims == std::vector<long>{2, 4, 6});

  BranchingReport b2 = branching_sum_check(5, Rat(0), 1);
  CHECK(b2.pass);
  CHECK(b2.level_dim == 6);
  CHECK(b2.constituent_dims == std::vector<long>{1, 5});

  BranchingReport b3 = branching_sum_check(4, rat(1, 2), 0);
  CHECK(b3.pass);
  CHECK(b3.level_dim == 4);
  CHECK(b3.constituent_dims == std::vector<long>{4});
}

TEST_CASE("closed forms for cbar2 and c2[l]") {
  // odd D = 2n+1: cbar2 = n mu^2 + n(n-1)|mu|,
  //               c2[l] = l^2 + 2l(n+|mu|-1/2) + n mu^2 + n^2 |mu|
  for (int n = 1; n <= 3; ++n)
    for (int twomu = -3; twomu <= 3; ++twomu) {
      Rat mu = rat(twomu, 2);
      int D = 2 * n + 1;
      CHECK(cbar2_value(D, mu) == n * mu * mu + n * (n - 1) * abs(mu));
      for (int l = 0; l <= 10; ++l) {
        Rat want = Rat(l) * l + 2 * l * (n + abs(mu) - rat(1, 2)) +
                   n * mu * mu + n * n * abs(mu);
        for (const IrrepLabel& lab : paper_weight_Rl(D, mu, l))
          CHECK(lab.casimir == want);
      }
    }
  // even D = 2n: cbar2 = (n-1) mu^2 + (n-1)^2 mu,
  //              c2[l] = l^2 + 2l(n+mu-1) + n mu^2 + (n^2-n) mu
  for (int n = 2; n <= 3; ++n)
    for (int twomu : {0, 1}) {
      Rat mu = rat(twomu, 2);
      int D = 2 * n;
      CHECK(cbar2_value(D, mu) ==
            (n - 1) * mu * mu + (n - 1) * (n - 1) * mu);
      for (int l = 0; l <= 10; ++l) {
        Rat want = Rat(l) * l + 2 * l * (n + mu - 1) + n * mu * mu +
                   (n * n - n) * mu;
        for (const IrrepLabel& lab : paper_weight_Rl(D, mu, l))
          CHECK(lab.casimir == want);
      }
    }
}

TEST_CASE("full branching matrix") {
  for (int D = 3; D <= 8; ++D)
    for (int twomu = -3; twomu <= 3; ++twomu) {
      Rat mu = rat(twomu, 2);
      if (!mu_allowed(D, mu)) continue;
      for (int I = 0; I <= 6; ++I) CHECK(branching_sum_check(D, mu, I).pass);
    }
}
