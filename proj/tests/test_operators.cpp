#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "micz/operators.hpp"

using namespace micz;

namespace {

// Minimal polynomial calculus over Q[x_0..x_{D-1}], used as an independent
// oracle for the mu = 0 scalar operators (no jets involved).
using PolyMap = std::map<std::vector<int>, Rat>;

PolyMap pm_deriv(const PolyMap& f, int v) {
  PolyMap out;
  for (const auto& [e, c] : f) {
    if (e[v] == 0) continue;
    std::vector<int> d = e;
    d[v] -= 1;
    out[d] += c * e[v];
  }
  return out;
}

PolyMap pm_mulx(const PolyMap& f, int v) {
  PolyMap out;
  for (const auto& [e, c] : f) {
    std::vector<int> d = e;
    d[v] += 1;
    out[d] += c;
  }
  return out;
}

PolyMap pm_axpy(const Rat& a, const PolyMap& x, const PolyMap& y) {
  PolyMap out = y;
  for (const auto& [e, c] : x) out[e] += a * c;
  return out;
}

Rat pm_eval(const PolyMap& f, const std::vector<Rat>& p) {
  Rat s = 0;
  for (const auto& [e, c] : f) {
    Rat t = c;
    for (size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) t *= p[v];
    s += t;
  }
  return s;
}

// L_beta f for mu = 0 by direct differentiation:
//   -(1/2) sum_a [d_a(x_a d_b f - x_b d_a f) + (x_a d_b - x_b d_a) d_a f]
//   + (x_b / r) f
Scalar rl_oracle(const PolyMap& f, int beta, const std::vector<Rat>& p,
                 const Rat& r) {
  int D = static_cast<int>(p.size());
  PolyMap acc;
  for (int a = 0; a < D; ++a) {
    PolyMap g = pm_axpy(Rat(-1), pm_mulx(pm_deriv(f, a), beta),
                        pm_mulx(pm_deriv(f, beta), a));
    PolyMap da_f = pm_deriv(f, a);
    PolyMap second = pm_axpy(Rat(-1), pm_mulx(pm_deriv(da_f, a), beta),
                             pm_mulx(pm_deriv(da_f, beta), a));
    acc = pm_axpy(Rat(1), pm_deriv(g, a), acc);
    acc = pm_axpy(Rat(1), second, acc);
  }
  return Scalar(rat(-1, 2)) * Scalar(pm_eval(acc, p)) +
         Scalar(p[beta] / r * pm_eval(f, p));
}

Poly to_poly(const PolyMap& f) {
  Poly out;
  for (const auto& [e, c] : f) out.push_back({e, c});
  return out;
}

} // namespace

TEST_CASE("problem construction") {
  ProblemSpec s3 = make_problem(3, rat(1, 2));
  CHECK(s3.n == 1);
  CHECK(s3.delta == rat(1, 4));  // (n-1)|mu| + mu^2
  CHECK(s3.cbar2 == rat(1, 4));
  CHECK(s3.rep.dim == 1);

  ProblemSpec s4 = make_problem(4, rat(1, 2));
  CHECK(s4.n == 2);
  CHECK(s4.delta == rat(1, 2));  // (n-1) mu
  CHECK(s4.rep.dim == 2);

  ProblemSpec s5 = make_problem(5, Rat(-1));
  CHECK(s5.delta == Rat(2));  // |mu| + mu^2
  CHECK(s5.rep.dim == 3);

  CHECK_THROWS_AS(make_problem(4, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(make_problem(7, rat(3, 2), 10), std::length_error);
}

TEST_CASE("nabla") {
  // mu = 0: plain partial derivative
  ProblemSpec spec = make_problem(3, Rat(0));
  FieldPoint p({0, 3, 4});
  OperatorContext ctx(spec, p);
  Poly x1{{{{0, 1, 0}, Rat(1)}}};
  SectionJet s = ctx.section({x1}, 3);
  SectionJet ds = ctx.nabla(1, s);
  CHECK(ds[0] == s[0].deriv(1));
  CHECK(ds[0].value() == Scalar(1));

  // direction 0 on a constant section vanishes for every charge: A_0 = 0
  ProblemSpec spec2 = make_problem(4, rat(1, 2));
  OperatorContext ctx2(spec2, FieldPoint({1, 2, 2, 0}));
  Poly one{{{{0, 0, 0, 0}, Rat(1)}}};
  SectionJet c = ctx2.section({one, Poly{}}, 2);
  for (const Jet& j : ctx2.nabla(0, c)) CHECK(j.is_zero());
}

TEST_CASE("hamiltonian on simple sections") {
  ProblemSpec spec = make_problem(3, Rat(0));
  FieldPoint p({1, 0, 0});  // r = 1
  OperatorContext ctx(spec, p);

  Poly one{{{{0, 0, 0}, Rat(1)}}};
  SectionJet hs = ctx.hamiltonian(ctx.section({one}, 2));
  CHECK(hs[0].value() == Scalar(-1));  // -1/r

  // r^2 section: -(1/2) * 6 - r = -4 at r = 1
  Poly r2{{{{2, 0, 0}, Rat(1)},
           {{0, 2, 0}, Rat(1)},
           {{0, 0, 2}, Rat(1)}}};
  SectionJet hr = ctx.hamiltonian(ctx.section({r2}, 2));
  CHECK(hr[0].value() == Scalar(-4));
}

TEST_CASE("angular momentum") {
  ProblemSpec spec = make_problem(3, Rat(0));
  OperatorContext ctx(spec, FieldPoint({0, 3, 4}));
  Poly r2{{{{2, 0, 0}, Rat(1)},
           {{0, 2, 0}, Rat(1)},
           {{0, 0, 2}, Rat(1)}}};
  SectionJet s = ctx.section({r2}, 3);
  for (int al = 0; al < 3; ++al)
    for (int be = 0; be < 3; ++be)
      // radial sections carry no angular momentum; alpha = beta vanishes
      // by antisymmetry
      for (const Jet& j : ctx.angular(al, be, s)) CHECK(j.is_zero());

  // pure curvature term at the special point: L_ab v = -gamma_ab v
  ProblemSpec spec5 = make_problem(5, rat(1, 2));
  OperatorContext ctx5(spec5, FieldPoint({5, 0, 0, 0, 0}));
  Poly one{{{{0, 0, 0, 0, 0}, Rat(1)}}};
  SectionJet c = ctx5.section({one, Poly{}}, 2);
  SectionJet lc = ctx5.angular(1, 2, c);
  Mat g12 = spec5.rep.M(1, 2);
  CHECK(lc[0].value() == -g12.at(0, 0));
  CHECK(lc[1].value() == -g12.at(1, 0));
}

TEST_CASE("runge-lenz on constants") {
  ProblemSpec spec = make_problem(4, Rat(0));
  OperatorContext ctx(spec, FieldPoint({7, 0, 0, 0}));
  Poly one{{{{0, 0, 0, 0}, Rat(1)}}};
  SectionJet c = ctx.section({one}, 4);
  for (int be = 0; be < 4; ++be) {
    SectionJet rc = ctx.runge_lenz(be, c);
    CHECK(rc[0].value() == (be == 0 ? Scalar(1) : Scalar(0)));
  }
}

TEST_CASE("runge-lenz matches the direct differentiation oracle") {
  ProblemSpec spec = make_problem(3, Rat(0));
  PolyMap f1{{{2, 1, 0}, Rat(1)}, {{0, 0, 3}, Rat(-2)}, {{0, 1, 1}, Rat(1)}};
  PolyMap f2{{{1, 1, 1}, rat(1, 2)}, {{3, 0, 0}, Rat(1)}, {{0, 2, 0}, Rat(-1)}};
  for (const std::vector<Rat>& p :
       {std::vector<Rat>{0, 3, 4}, std::vector<Rat>{12, 3, 4}}) {
    FieldPoint fp(p);
    OperatorContext ctx(spec, fp);
    Rat r = fp.r.to_rat();
    for (const PolyMap& f : {f1, f2}) {
      SectionJet s = ctx.section({to_poly(f)}, 4);
      for (int be = 0; be < 3; ++be)
        CHECK(ctx.runge_lenz(be, s)[0].value() == rl_oracle(f, be, p, r));
    }
  }
}

TEST_CASE("relation bookkeeping") {
  CHECK(relation_name(Relation::LabH) == "[L_mn, h] = 0");
  CHECK(relation_name(Relation::LL) == "[L_m, L_n] = -2i h L_mn");
  CHECK(relation_input_order(Relation::LabLab) == 2);
  CHECK(relation_input_order(Relation::LL) == 4);
}

TEST_CASE("symmetry algebra on a small matrix") {
  ProblemSpec spec = make_problem(3, rat(1, 2));
  std::vector<FieldPoint> pts = sample_points(3, 2, 13);
  auto secs = sample_sections(3, spec.rep.dim, 1, 2, 14);
  for (Relation rel : {Relation::LabH, Relation::LabLab, Relation::LabL,
                       Relation::LH, Relation::LL}) {
    CheckReport r = check_symmetry_algebra(spec, pts, secs, rel);
    CHECK(r.pass());
    CHECK_FALSE(r.items.empty());
  }
}

TEST_CASE("L.L identity") {
  for (auto [D, mu] : {std::pair<int, Rat>{3, Rat(0)}, {4, Rat(0)}}) {
    ProblemSpec spec = make_problem(D, mu);
    CHECK(spec.cbar2 == Rat(0));
    std::vector<FieldPoint> pts = sample_points(D, 2, 17);
    auto secs = sample_sections(D, spec.rep.dim, 1, 2, 18);
    CHECK(check_lrl_square(spec, pts, secs).pass());
  }
}
