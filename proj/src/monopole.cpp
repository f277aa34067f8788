#include "micz/monopole.hpp"

#include <stdexcept>

namespace micz {

FieldPoint::FieldPoint(std::vector<Rat> coords_greek) {
  D = static_cast<int>(coords_greek.size());
  if (D < 3) throw std::invalid_argument("field point needs dimension >= 3");
  coord = std::move(coords_greek);
  Rat rho = 0;
  for (const Rat& x : coord) rho += x * x;
  if (rho == 0) throw std::invalid_argument("field point at the origin");
  r = Scalar::sqrt_of(rho);
  if (r.is_rational() && r.to_rat() + coord[0] == 0)
    throw std::invalid_argument("field point on the gauge string (r + x_0 = 0)");
}

FieldFrame<Scalar> scalar_frame(const FieldPoint& p) {
  FieldFrame<Scalar> f;
  f.D = p.D;
  f.x.reserve(p.D);
  for (const Rat& x : p.coord) f.x.emplace_back(x);
  f.r = p.r;
  f.inv_r = p.r.inverse();
  f.inv_r_x0 = (p.r + Scalar(p.coord[0])).inverse();
  return f;
}

FieldFrame<Jet> jet_frame(const FieldPoint& p, int order) {
  FieldFrame<Jet> f;
  f.D = p.D;
  f.x.reserve(p.D);
  for (int mu = 0; mu < p.D; ++mu)
    f.x.push_back(Jet::coordinate(p.coord, mu, order));
  f.r = jet_of_radius(p.coord, order);
  f.inv_r = f.r.inverse();
  f.inv_r_x0 = (f.r + f.x[0]).inverse();
  return f;
}

Mat assemble(const RepSO& rep, const AlgCoords<Scalar>& coords) {
  Mat out = Mat::zero(rep.dim);
  for (int p = 0; p < static_cast<int>(coords.size()); ++p) {
    if (coords[p].is_zero()) continue;
    out += coords[p] * rep.gen[p];
  }
  return out;
}

namespace {

Scalar zs() { return Scalar(); }

// Scalar-coefficient curvature table for mu < nu, with a signed accessor.
struct CurvatureTable {
  int D = 0;
  std::vector<std::vector<AlgCoords<Scalar>>> F;  // F[mu][nu], mu < nu

  AlgCoords<Scalar> get(int mu, int nu) const {
    int m = D - 1;
    if (mu == nu) return AlgCoords<Scalar>(pair_count(m), zs());
    if (mu < nu) return F[mu][nu];
    AlgCoords<Scalar> out = F[nu][mu];
    for (Scalar& v : out) v = -v;
    return out;
  }
};

CurvatureTable curvature_table(const FieldFrame<Scalar>& f) {
  CurvatureTable t;
  t.D = f.D;
  t.F.assign(f.D, std::vector<AlgCoords<Scalar>>(f.D));
  for (int mu = 0; mu < f.D; ++mu)
    for (int nu = mu + 1; nu < f.D; ++nu)
      t.F[mu][nu] = curvature_coords(f, mu, nu, zs());
  return t;
}

void axpy(AlgCoords<Scalar>& dst, const Scalar& k, const AlgCoords<Scalar>& src) {
  for (size_t p = 0; p < dst.size(); ++p) dst[p] += k * src[p];
}

struct ResidualLog {
  bool pass = true;
  std::vector<std::string> entries;

  void note(const Scalar& v) {
    if (v.is_zero()) return;
    pass = false;
    if (entries.size() < 4) entries.push_back(v.str());
  }
  void note_coords(const AlgCoords<Scalar>& c) {
    for (const Scalar& v : c) note(v);
  }
  void note_mat(const Mat& m) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) note(m.at(r, c));
  }
};

IdentityReport finish(const std::string& name, int D, const Rat& mu, int points,
                      const ResidualLog& log) {
  IdentityReport rep;
  rep.identity = name;
  rep.D = D;
  rep.mu = mu;
  rep.points_checked = points;
  rep.pass = log.pass;
  rep.max_residual_entries = log.entries;
  return rep;
}

// Shared engine for the F_la F_lb contraction identities: residual of
// r^2 F_la F_lb - kdelta (d_ab/r^2 - x_a x_b/r^4) Id - i koff F_ab.
ResidualLog contraction_residuals(const RepSO& rep, int D, const Rat& kdelta,
                                  const Rat& koff,
                                  const std::vector<FieldPoint>& points) {
  ResidualLog log;
  for (const FieldPoint& p : points) {
    if (p.D != D) throw std::invalid_argument("point dimension mismatch");
    FieldFrame<Scalar> f = scalar_frame(p);
    CurvatureTable t = curvature_table(f);
    std::vector<std::vector<Mat>> F(D, std::vector<Mat>(D));
    for (int mu = 0; mu < D; ++mu)
      for (int nu = 0; nu < D; ++nu)
        F[mu][nu] = assemble(rep, t.get(mu, nu));
    Scalar r2 = f.r * f.r;
    Scalar inv_r2 = f.inv_r * f.inv_r;
    Mat id = Mat::identity(rep.dim);
    for (int al = 0; al < D; ++al)
      for (int be = 0; be < D; ++be) {
        Mat lhs = Mat::zero(rep.dim);
        for (int la = 0; la < D; ++la) {
          if (la == al || la == be) continue;
          lhs += F[la][al] * F[la][be];
        }
        lhs = r2 * lhs;
        Scalar diag = Scalar(kdelta) *
                      ((al == be ? inv_r2 : Scalar(0)) -
                       f.x[al] * f.x[be] * inv_r2 * inv_r2);
        Mat rhs = diag * id + (Scalar::i() * Scalar(koff)) * F[al][be];
        log.note_mat(lhs - rhs);
      }
  }
  return log;
}

// Jet-derived curvature dA - dA + i[A, A] vs the closed form, as matrices.
bool crosscheck_point(const RepSO& rep, const FieldPoint& p,
                      ResidualLog* log) {
  FieldFrame<Scalar> fs = scalar_frame(p);
  FieldFrame<Jet> fj = jet_frame(p, 1);
  std::vector<AlgCoords<Jet>> Aj(p.D);
  std::vector<Mat> Amat(p.D);
  for (int mu = 0; mu < p.D; ++mu) {
    Aj[mu] = potential_coords(fj, mu, Jet::constant(p.D, 1, Scalar()));
    AlgCoords<Scalar> av(pair_count(p.D - 1));
    for (size_t q = 0; q < av.size(); ++q) av[q] = Aj[mu][q].value();
    Amat[mu] = assemble(rep, av);
  }
  bool ok = true;
  for (int mu = 0; mu < p.D; ++mu)
    for (int nu = mu + 1; nu < p.D; ++nu) {
      AlgCoords<Scalar> dc(pair_count(p.D - 1));
      for (size_t q = 0; q < dc.size(); ++q)
        dc[q] = Aj[nu][q].deriv(mu).value() - Aj[mu][q].deriv(nu).value();
      Mat jet_side = assemble(rep, dc) + Scalar::i() * commutator(Amat[mu], Amat[nu]);
      Mat closed = assemble(rep, curvature_coords(fs, mu, nu, zs()));
      Mat res = jet_side - closed;
      if (!res.is_zero()) {
        ok = false;
        if (log) log->note_mat(res);
      }
    }
  return ok;
}

} // namespace

FieldEval eval_potential(const RepSO& rep, const FieldPoint& p) {
  FieldEval ev;
  ev.D = p.D;
  FieldFrame<Scalar> f = scalar_frame(p);
  ev.A.reserve(p.D);
  for (int mu = 0; mu < p.D; ++mu)
    ev.A.push_back(assemble(rep, potential_coords(f, mu, zs())));
  return ev;
}

FieldEval eval_curvature(const RepSO& rep, const FieldPoint& p) {
  FieldEval ev = eval_potential(rep, p);
  FieldFrame<Scalar> f = scalar_frame(p);
  CurvatureTable t = curvature_table(f);
  ev.F.assign(p.D, std::vector<Mat>(p.D));
  for (int mu = 0; mu < p.D; ++mu)
    for (int nu = 0; nu < p.D; ++nu)
      ev.F[mu][nu] = assemble(rep, t.get(mu, nu));
  if (!crosscheck_point(rep, p, nullptr))
    throw std::logic_error("curvature closed form disagrees with dA + i[A,A]");
  return ev;
}

std::vector<IdentityReport> check_lemma_part1(const RepSO& rep, int D,
                                              const std::vector<FieldPoint>& points) {
  if (rep.m() != D - 1)
    throw std::invalid_argument("representation algebra must be so(D-1)");
  int m = D - 1;
  Mat C2 = rep.casimir();
  ResidualLog l8, l9, l10, l11;
  for (const FieldPoint& p : points) {
    if (p.D != D) throw std::invalid_argument("point dimension mismatch");
    FieldFrame<Scalar> fs = scalar_frame(p);
    CurvatureTable t = curvature_table(fs);
    std::vector<AlgCoords<Scalar>> A(D);
    for (int mu = 0; mu < D; ++mu) A[mu] = potential_coords(fs, mu, zs());
    FieldFrame<Jet> fj = jet_frame(p, 1);
    Jet jz = Jet::constant(D, 1, Scalar());
    std::vector<std::vector<AlgCoords<Jet>>> Fj(D, std::vector<AlgCoords<Jet>>(D));
    for (int mu = 0; mu < D; ++mu)
      for (int nu = mu + 1; nu < D; ++nu)
        Fj[mu][nu] = curvature_coords(fj, mu, nu, jz);
    // d_ka F[mu][nu][p] at the base point, with sign handling for mu > nu
    auto dF = [&](int ka, int mu, int nu) {
      AlgCoords<Scalar> out(pair_count(m));
      if (mu == nu) return out;
      int sgn = mu < nu ? 1 : -1;
      const AlgCoords<Jet>& src = Fj[std::min(mu, nu)][std::max(mu, nu)];
      for (size_t q = 0; q < out.size(); ++q) {
        Scalar v = src[q].deriv(ka).value();
        out[q] = sgn > 0 ? v : -v;
      }
      return out;
    };

    Scalar r2 = fs.r * fs.r;
    Scalar inv_r2 = fs.inv_r * fs.inv_r;

    // (10): x.A = 0, x_mu F_{mu nu} = 0, [nabla_mu, F_{mu nu}] = 0
    {
      AlgCoords<Scalar> xa(pair_count(m));
      for (int mu = 0; mu < D; ++mu) axpy(xa, fs.x[mu], A[mu]);
      l10.note_coords(xa);
      for (int nu = 0; nu < D; ++nu) {
        AlgCoords<Scalar> xf(pair_count(m));
        AlgCoords<Scalar> div(pair_count(m));
        for (int mu = 0; mu < D; ++mu) {
          if (mu == nu) continue;
          axpy(xf, fs.x[mu], t.get(mu, nu));
          axpy(div, Scalar(1), dF(mu, mu, nu));
          axpy(div, Scalar::i(), alg_bracket(A[mu], t.get(mu, nu), m, zs()));
        }
        l10.note_coords(xf);
        l10.note_coords(div);
      }
    }

    // (9): [nabla_k, F_{mu nu}] = (x_mu F_{nu k} + x_nu F_{k mu}
    //                              - 2 x_k F_{mu nu}) / r^2
    for (int ka = 0; ka < D; ++ka)
      for (int mu = 0; mu < D; ++mu)
        for (int nu = mu + 1; nu < D; ++nu) {
          AlgCoords<Scalar> res = dF(ka, mu, nu);
          axpy(res, Scalar::i(), alg_bracket(A[ka], t.get(mu, nu), m, zs()));
          axpy(res, -fs.x[mu] * inv_r2, t.get(nu, ka));
          axpy(res, -fs.x[nu] * inv_r2, t.get(ka, mu));
          axpy(res, Scalar(2) * fs.x[ka] * inv_r2, t.get(mu, nu));
          l9.note_coords(res);
        }

    // (11): r^2 [F_{mu nu}, F_{al be}] + i F_{mu be} d_{al nu}
    //       - i F_{nu be} d_{al mu} + i F_{al mu} d_{be nu}
    //       - i F_{al nu} d_{be mu}
    //       = (i/r^2)(x_mu x_al F_{be nu} + x_mu x_be F_{nu al}
    //                 - x_nu x_al F_{be mu} - x_nu x_be F_{mu al})
    for (int mu = 0; mu < D; ++mu)
      for (int nu = mu + 1; nu < D; ++nu)
        for (int al = 0; al < D; ++al)
          for (int be = al + 1; be < D; ++be) {
            AlgCoords<Scalar> res(pair_count(m));
            axpy(res, r2, alg_bracket(t.get(mu, nu), t.get(al, be), m, zs()));
            Scalar I = Scalar::i();
            if (al == nu) axpy(res, I, t.get(mu, be));
            if (al == mu) axpy(res, -I, t.get(nu, be));
            if (be == nu) axpy(res, I, t.get(al, mu));
            if (be == mu) axpy(res, -I, t.get(al, nu));
            Scalar w = I * inv_r2;
            axpy(res, -w * fs.x[mu] * fs.x[al], t.get(be, nu));
            axpy(res, -w * fs.x[mu] * fs.x[be], t.get(nu, al));
            axpy(res, w * fs.x[nu] * fs.x[al], t.get(be, mu));
            axpy(res, w * fs.x[nu] * fs.x[be], t.get(mu, al));
            l11.note_coords(res);
          }

    // (8): F_{mu nu} F_{mu nu} = (2/r^4) c_2, as matrices in the rep
    {
      Mat sum = Mat::zero(rep.dim);
      for (int mu = 0; mu < D; ++mu)
        for (int nu = mu + 1; nu < D; ++nu) {
          Mat Fm = assemble(rep, t.get(mu, nu));
          sum += Fm * Fm;
        }
      sum = Scalar(2) * sum;
      l8.note_mat(sum - (Scalar(2) * inv_r2 * inv_r2) * C2);
    }
  }
  int np = static_cast<int>(points.size());
  Rat mu0 = abs(rep.highest_weight.rank() > 0
                    ? rep.highest_weight.entries[0]
                    : Rat(0));
  return {finish("F.F = 2 c2 / r^4", D, mu0, np, l8),
          finish("[nabla_k, F_mn] = (x_m F_nk + x_n F_km - 2 x_k F_mn)/r^2", D,
                 mu0, np, l9),
          finish("x.A = 0, x_m F_mn = 0, [nabla_m, F_mn] = 0", D, mu0, np, l10),
          finish("r^2 [F, F] + i delta terms = (i/r^2) x x F terms", D, mu0, np,
                 l11)};
}

IdentityReport check_lemma_part2(int n, const Rat& mu,
                                 const std::vector<FieldPoint>& points) {
  if (n < 1) throw std::invalid_argument("part 2 needs n >= 1");
  RepSO rep = rep_s2mu(2 * n, mu);
  Rat c2 = rep.highest_weight.rank() > 0
               ? casimir_value(rep.algebra, rep.highest_weight)
               : Rat(0);
  ResidualLog log =
      contraction_residuals(rep, 2 * n + 1, c2 / n, Rat(n - 1), points);
  return finish("r^2 F_la F_lb = (c2/n)(d_ab/r^2 - x_a x_b/r^4) + i(n-1) F_ab",
                2 * n + 1, mu, static_cast<int>(points.size()), log);
}

IdentityReport check_eq13_form(int n, const RepSO& rep,
                               const std::vector<FieldPoint>& points) {
  if (n < 2) throw std::invalid_argument("part 3 needs n >= 2");
  if (rep.m() != 2 * n - 1)
    throw std::invalid_argument("representation algebra must be so(2n-1)");
  ResidualLog log = contraction_residuals(rep, 2 * n, rat(n - 1, 2),
                                          rat(2 * n - 3, 2), points);
  Rat mu0 = abs(rep.highest_weight.rank() > 0 ? rep.highest_weight.entries[0]
                                              : Rat(0));
  return finish(
      "r^2 F_la F_lb = ((n-1)/2)(d_ab/r^2 - x_a x_b/r^4) + i(n-3/2) F_ab",
      2 * n, mu0, static_cast<int>(points.size()), log);
}

IdentityReport check_lemma_part3(int n, const std::vector<FieldPoint>& points) {
  return check_eq13_form(n, spinor_rep(2 * n - 1), points);
}

IdentityReport check_curvature_crosscheck(const RepSO& rep, int D,
                                          const std::vector<FieldPoint>& points) {
  if (rep.m() != D - 1)
    throw std::invalid_argument("representation algebra must be so(D-1)");
  ResidualLog log;
  for (const FieldPoint& p : points) {
    if (p.D != D) throw std::invalid_argument("point dimension mismatch");
    crosscheck_point(rep, p, &log);
  }
  Rat mu0 = abs(rep.highest_weight.rank() > 0 ? rep.highest_weight.entries[0]
                                              : Rat(0));
  return finish("F equals dA - dA + i[A, A]", D, mu0,
                static_cast<int>(points.size()), log);
}

} // namespace micz
