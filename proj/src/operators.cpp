#include "micz/operators.hpp"

#include <stdexcept>

namespace micz {

ProblemSpec make_problem(int D, const Rat& mu, int size_budget) {
  if (!mu_allowed(D, mu))
    throw std::invalid_argument(
        "magnetic charge " + rat_str(mu) + " is not admissible in dimension " +
        std::to_string(D) +
        (D % 2 == 0 ? " (even dimensions require mu = 0 or 1/2)" : ""));
  ProblemSpec spec;
  spec.D = D;
  spec.n = D / 2;
  spec.mu = mu;
  if (D % 2 == 0)
    spec.delta = (spec.n - 1) * mu;
  else
    spec.delta = (spec.n - 1) * abs(mu) + mu * mu;
  spec.cbar2 = cbar2_value(D, mu);
  spec.rep = rep_s2mu(D - 1, mu, size_budget);
  return spec;
}

namespace {
const int kGaugeOrder = 4;
}

OperatorContext::OperatorContext(const ProblemSpec& spec, const FieldPoint& base)
    : spec_(spec), base_(base.coord) {
  if (base.D != spec.D)
    throw std::invalid_argument("base point dimension mismatch");
  FieldFrame<Jet> fj = jet_frame(base, kGaugeOrder);
  xjet_ = fj.x;
  inv_r_ = fj.inv_r;
  inv_r2_ = fj.inv_r * fj.inv_r;
  Jet jz = Jet::constant(spec.D, kGaugeOrder, Scalar());
  Jet r2 = fj.r * fj.r;
  acoords_.resize(spec.D);
  r2fcoords_.assign(spec.D, std::vector<std::vector<Jet>>(spec.D));
  for (int mu = 0; mu < spec.D; ++mu) {
    acoords_[mu] = potential_coords(fj, mu, jz);
    for (int nu = mu + 1; nu < spec.D; ++nu) {
      r2fcoords_[mu][nu] = curvature_coords(fj, mu, nu, jz);
      for (Jet& c : r2fcoords_[mu][nu]) c = r2 * c;
    }
  }
}

SectionJet OperatorContext::section(const std::vector<Poly>& polys,
                                    int order) const {
  if (static_cast<int>(polys.size()) != spec_.rep.dim)
    throw std::invalid_argument("section component count mismatch");
  SectionJet s;
  s.reserve(polys.size());
  for (const Poly& poly : polys) s.push_back(poly_to_jet(poly, base_, order));
  return s;
}

SectionJet OperatorContext::apply_alg(const std::vector<Jet>& coords,
                                      const SectionJet& s) const {
  int dim = spec_.rep.dim;
  SectionJet out;
  out.reserve(dim);
  for (int i = 0; i < dim; ++i) out.emplace_back(spec_.D, s[i].order());
  for (size_t p = 0; p < coords.size(); ++p) {
    if (coords[p].is_zero()) continue;
    const Mat& g = spec_.rep.gen[p];
    for (int i = 0; i < dim; ++i) {
      Jet t(spec_.D, s[i].order());
      bool any = false;
      for (int j = 0; j < dim; ++j) {
        const Scalar& gij = g.at(i, j);
        if (gij.is_zero() || s[j].is_zero()) continue;
        t += gij * s[j];
        any = true;
      }
      if (any) out[i] += coords[p] * t;
    }
  }
  return out;
}

SectionJet OperatorContext::nabla(int al, const SectionJet& s) const {
  SectionJet gauge = apply_alg(acoords_[al], s);
  SectionJet out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i)
    out.push_back(s[i].deriv(al) + Scalar::i() * gauge[i]);
  return out;
}

SectionJet OperatorContext::hamiltonian(const SectionJet& s) const {
  int dim = spec_.rep.dim;
  SectionJet out(dim, Jet(spec_.D, s[0].order() >= 2 ? s[0].order() - 2 : 0));
  for (int al = 0; al < spec_.D; ++al) {
    SectionJet lap = nabla(al, nabla(al, s));
    for (int i = 0; i < dim; ++i) out[i] += Scalar(Rat(-1, 2)) * lap[i];
  }
  Scalar half_delta(spec_.delta / 2);
  for (int i = 0; i < dim; ++i)
    out[i] += half_delta * (inv_r2_ * s[i]) - inv_r_ * s[i];
  return out;
}

SectionJet OperatorContext::angular(int al, int be, const SectionJet& s) const {
  int dim = spec_.rep.dim;
  SectionJet na = nabla(al, s), nb = nabla(be, s);
  SectionJet out;
  out.reserve(dim);
  for (int i = 0; i < dim; ++i)
    out.push_back(-Scalar::i() * (xjet_[al] * nb[i] - xjet_[be] * na[i]));
  if (al != be) {
    const std::vector<Jet>& f =
        al < be ? r2fcoords_[al][be] : r2fcoords_[be][al];
    SectionJet fs = apply_alg(f, s);
    Scalar sgn = al < be ? Scalar(1) : Scalar(-1);
    for (int i = 0; i < dim; ++i) out[i] += sgn * fs[i];
  }
  return out;
}

SectionJet OperatorContext::runge_lenz(int be, const SectionJet& s) const {
  int dim = spec_.rep.dim;
  SectionJet out(dim, Jet(spec_.D, s[0].order() >= 2 ? s[0].order() - 2 : 0));
  for (int al = 0; al < spec_.D; ++al) {
    if (al == be) continue;
    SectionJet t1 = nabla(al, angular(al, be, s));
    SectionJet t2 = angular(al, be, nabla(al, s));
    for (int i = 0; i < dim; ++i)
      out[i] += Scalar(Rat(-1, 2)) * Scalar::i() * (t1[i] + t2[i]);
  }
  for (int i = 0; i < dim; ++i) out[i] += xjet_[be] * (inv_r_ * s[i]);
  return out;
}

std::string relation_name(Relation rel) {
  switch (rel) {
    case Relation::LabH: return "[L_mn, h] = 0";
    case Relation::LabLab: return "[L_mn, L_ab] = so(D) structure";
    case Relation::LabL: return "[L_mn, L_l] = i d_ml L_n - i d_nl L_m";
    case Relation::LH: return "[L_m, h] = 0";
    case Relation::LL: return "[L_m, L_n] = -2i h L_mn";
  }
  return "";
}

int relation_input_order(Relation rel) {
  switch (rel) {
    case Relation::LabH: return 3;
    case Relation::LabLab: return 2;
    case Relation::LabL: return 3;
    case Relation::LH: return 4;
    case Relation::LL: return 4;
  }
  return 4;
}

namespace {

// The relations close at jet order 0, so the comparison is between the
// values of the two sides at the base point.
void note_residual(CheckItem& item, const SectionJet& lhs,
                   const SectionJet& rhs) {
  for (size_t i = 0; i < lhs.size(); ++i) {
    Scalar res = lhs[i].value() - rhs[i].value();
    if (!res.is_zero()) {
      item.pass = false;
      if (item.residual.empty()) item.residual = res.str();
    }
  }
}

SectionJet zero_like(const SectionJet& s, int D) {
  return SectionJet(s.size(), Jet(D, 0));
}

SectionJet scaled(const Scalar& k, const SectionJet& s) {
  SectionJet out;
  out.reserve(s.size());
  for (const Jet& j : s) out.push_back(k * j);
  return out;
}

SectionJet added(const SectionJet& x, const SectionJet& y) {
  SectionJet out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
  return out;
}

} // namespace

CheckReport check_symmetry_algebra(const ProblemSpec& spec,
                                   const std::vector<FieldPoint>& points,
                                   const std::vector<std::vector<Poly>>& sections,
                                   Relation rel) {
  CheckReport report;
  int D = spec.D;
  int order = relation_input_order(rel);
  Scalar I = Scalar::i();
  int pt = 0;
  for (const FieldPoint& p : points) {
    OperatorContext ctx(spec, p);
    CheckItem item;
    item.what = relation_name(rel) + " @ point " + std::to_string(pt++);
    for (const std::vector<Poly>& polys : sections) {
      SectionJet s = ctx.section(polys, order);
      switch (rel) {
        case Relation::LabH: {
          SectionJet hs = ctx.hamiltonian(s);
          for (int mu = 0; mu < D; ++mu)
            for (int nu = mu + 1; nu < D; ++nu)
              note_residual(item, ctx.angular(mu, nu, hs),
                            ctx.hamiltonian(ctx.angular(mu, nu, s)));
          break;
        }
        case Relation::LabLab: {
          std::vector<std::vector<SectionJet>> Ls(D, std::vector<SectionJet>(D));
          for (int mu = 0; mu < D; ++mu)
            for (int nu = 0; nu < D; ++nu)
              if (mu != nu) Ls[mu][nu] = ctx.angular(mu, nu, s);
          for (int mu = 0; mu < D; ++mu)
            for (int nu = mu + 1; nu < D; ++nu)
              for (int al = 0; al < D; ++al)
                for (int be = al + 1; be < D; ++be) {
                  SectionJet lhs =
                      added(ctx.angular(mu, nu, Ls[al][be]),
                            scaled(Scalar(-1), ctx.angular(al, be, Ls[mu][nu])));
                  SectionJet rhs = zero_like(s, D);
                  if (mu == al && nu != be) rhs = added(rhs, scaled(I, Ls[nu][be]));
                  if (nu == al && mu != be) rhs = added(rhs, scaled(-I, Ls[mu][be]));
                  if (mu == be && nu != al) rhs = added(rhs, scaled(-I, Ls[nu][al]));
                  if (nu == be && mu != al) rhs = added(rhs, scaled(I, Ls[mu][al]));
                  note_residual(item, lhs, rhs);
                }
          break;
        }
        case Relation::LabL: {
          std::vector<SectionJet> Rl(D);
          for (int la = 0; la < D; ++la) Rl[la] = ctx.runge_lenz(la, s);
          for (int mu = 0; mu < D; ++mu)
            for (int nu = mu + 1; nu < D; ++nu) {
              SectionJet Labs = ctx.angular(mu, nu, s);
              for (int la = 0; la < D; ++la) {
                SectionJet lhs =
                    added(ctx.angular(mu, nu, Rl[la]),
                          scaled(Scalar(-1), ctx.runge_lenz(la, Labs)));
                SectionJet rhs = zero_like(s, D);
                if (mu == la) rhs = added(rhs, scaled(I, Rl[nu]));
                if (nu == la) rhs = added(rhs, scaled(-I, Rl[mu]));
                note_residual(item, lhs, rhs);
              }
            }
          break;
        }
        case Relation::LH: {
          SectionJet hs = ctx.hamiltonian(s);
          for (int mu = 0; mu < D; ++mu)
            note_residual(item, ctx.runge_lenz(mu, hs),
                          ctx.hamiltonian(ctx.runge_lenz(mu, s)));
          break;
        }
        case Relation::LL: {
          std::vector<SectionJet> Rl(D);
          for (int mu = 0; mu < D; ++mu) Rl[mu] = ctx.runge_lenz(mu, s);
          for (int mu = 0; mu < D; ++mu)
            for (int nu = mu + 1; nu < D; ++nu) {
              SectionJet lhs =
                  added(ctx.runge_lenz(mu, Rl[nu]),
                        scaled(Scalar(-1), ctx.runge_lenz(nu, Rl[mu])));
              SectionJet rhs = scaled(Scalar(-2) * I,
                                      ctx.hamiltonian(ctx.angular(mu, nu, s)));
              note_residual(item, lhs, rhs);
            }
          break;
        }
      }
    }
    report.items.push_back(item);
  }
  return report;
}

CheckReport check_lrl_square(const ProblemSpec& spec,
                             const std::vector<FieldPoint>& points,
                             const std::vector<std::vector<Poly>>& sections) {
  CheckReport report;
  int D = spec.D;
  Scalar c(Rat(D - 1) * Rat(D - 1) / 2 - 2 * spec.cbar2);
  int pt = 0;
  for (const FieldPoint& p : points) {
    OperatorContext ctx(spec, p);
    CheckItem item;
    item.what = "L.L = 1 + ((D-1)^2/2 - 2 cbar2 + J.J) h @ point " +
                std::to_string(pt++);
    for (const std::vector<Poly>& polys : sections) {
      SectionJet s = ctx.section(polys, 4);
      SectionJet lhs = zero_like(s, D);
      for (int mu = 0; mu < D; ++mu)
        lhs = added(lhs, ctx.runge_lenz(mu, ctx.runge_lenz(mu, s)));
      SectionJet hs = ctx.hamiltonian(s);
      SectionJet rhs = added(s, scaled(c, hs));
      for (int mu = 0; mu < D; ++mu)
        for (int nu = mu + 1; nu < D; ++nu)
          rhs = added(rhs, scaled(Scalar(2),
                                  ctx.angular(mu, nu, ctx.angular(mu, nu, hs))));
      note_residual(item, lhs, rhs);
    }
    report.items.push_back(item);
  }
  return report;
}

} // namespace micz
