#include "micz/spinrep.hpp"

#include <functional>
#include <stdexcept>

namespace micz {

namespace {

std::string first_nonzero_entry(const Mat& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) return m.at(r, c).str();
  return "";
}

void add_item(CheckReport& rep, const std::string& what, const Mat& residual) {
  CheckItem item;
  item.what = what;
  item.pass = residual.is_zero();
  if (!item.pass) item.residual = first_nonzero_entry(residual);
  rep.items.push_back(std::move(item));
}

void add_item(CheckReport& rep, const std::string& what, bool pass,
              const std::string& note = "") {
  rep.items.push_back({what, pass, pass ? "" : note});
}

// Incremental RREF over the Scalar field, tracking coordinates relative to
// the original (unreduced) vectors that were accepted.
class LinBasis {
 public:
  explicit LinBasis(int ncols) : ncols_(ncols) {}

  int size() const { return nadded_; }

  bool try_add(const std::vector<Scalar>& v) {
    std::vector<Scalar> w = v;
    std::vector<Scalar> comb(nadded_ + 1);
    comb[nadded_] = Scalar(1);
    reduce(w, comb);
    int p = first_nonzero(w);
    if (p < 0) return false;
    Scalar inv = w[p].inverse();
    for (auto& x : w) x = inv * x;
    for (auto& x : comb) x = inv * x;
    // back-eliminate so pivot columns stay clean
    for (auto& row : rows_) {
      Scalar f = row.vec[p];
      if (f.is_zero()) continue;
      row.comb.resize(nadded_ + 1);
      for (int c = 0; c < ncols_; ++c) row.vec[c] -= f * w[c];
      for (size_t c = 0; c < comb.size(); ++c) row.comb[c] -= f * comb[c];
    }
    rows_.push_back({std::move(w), std::move(comb), p});
    ++nadded_;
    return true;
  }

  // Coordinates of v over the accepted original vectors; throws if v is
  // outside the span.
  std::vector<Scalar> coords(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    std::vector<Scalar> comb(nadded_);
    reduce(w, comb);
    if (first_nonzero(w) >= 0)
      throw std::logic_error("vector not in cyclic submodule span");
    // the reduce invariant is w = v + sum comb[c] original_c, so at w = 0
    // the coordinates of v carry the opposite sign
    for (Scalar& x : comb) x = -x;
    return comb;
  }

 private:
  struct Row {
    std::vector<Scalar> vec;
    std::vector<Scalar> comb;
    int pivot;
  };

  void reduce(std::vector<Scalar>& w, std::vector<Scalar>& comb) const {
    for (const auto& row : rows_) {
      Scalar f = w[row.pivot];
      if (f.is_zero()) continue;
      for (int c = 0; c < ncols_; ++c)
        if (!row.vec[c].is_zero()) w[c] -= f * row.vec[c];
      for (size_t c = 0; c < row.comb.size(); ++c)
        if (!row.comb[c].is_zero()) comb[c] -= f * row.comb[c];
    }
  }

  static int first_nonzero(const std::vector<Scalar>& w) {
    for (size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  int ncols_;
  int nadded_ = 0;
  std::vector<Row> rows_;
};

Mat cartan_E_generic(const std::function<Mat(int, int)>& M, int j, int k,
                     int eta, int etap) {
  Scalar i = Scalar::i();
  Mat e = M(2 * j - 1, 2 * k - 1) + (Scalar(Rat(eta)) * i) * M(2 * j, 2 * k - 1) +
          (Scalar(Rat(etap)) * i) * M(2 * j - 1, 2 * k) -
          Scalar(Rat(eta * etap)) * M(2 * j, 2 * k);
  return Scalar(Rat(-1, 2)) * e;
}

std::vector<Rat> weight_of_index(const std::vector<Mat>& H, int idx) {
  std::vector<Rat> w;
  w.reserve(H.size());
  for (const Mat& h : H) w.push_back(h.at(idx, idx).to_rat());
  return w;
}

} // namespace

Mat RepSO::M(int a, int b) const {
  if (a < 1 || b < 1 || a > m() || b > m())
    throw std::out_of_range("generator index out of range");
  if (a == b) return Mat::zero(dim);
  if (a < b) return gen[pair_index(a, b, m())];
  return -gen[pair_index(b, a, m())];
}

Mat RepSO::casimir() const {
  Mat c = Mat::zero(dim);
  for (const Mat& g : gen) c += g * g;  // (1/2) * 2 * sum_{a<b}
  return c;
}

int RepSO::top_index() const {
  std::vector<Mat> Hs;
  for (int j = 1; 2 * j <= m(); ++j) Hs.push_back(H(j));
  for (int idx = 0; idx < dim; ++idx) {
    bool diag_ok = true;
    std::vector<Rat> w;
    for (const Mat& h : Hs) {
      for (int c = 0; c < dim && diag_ok; ++c)
        if (c != idx && !h.at(idx, c).is_zero()) diag_ok = false;
      if (!diag_ok) break;
      w.push_back(h.at(idx, idx).to_rat());
    }
    if (diag_ok && w == highest_weight.entries) return idx;
  }
  throw std::logic_error("highest-weight basis vector not found");
}

RepSO trivial_rep(int m) {
  RepSO r;
  r.algebra = algebra_so(m);
  r.dim = 1;
  r.gen.assign(pair_count(m), Mat::zero(1));
  r.highest_weight.entries.assign(r.algebra.rank, Rat(0));
  return r;
}

namespace {

RepSO rep_from_gammas(int m) {
  GammaSet g = build_gammas(m);
  RepSO r;
  r.algebra = algebra_so(m);
  r.dim = g.N;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) r.gen.push_back(gamma_ab(g, a, b));
  // certified highest weight: lexicographically maximal joint H_j diagonal
  std::vector<Mat> Hs;
  for (int j = 1; 2 * j <= m; ++j) Hs.push_back(r.H(j));
  std::vector<Rat> best;
  for (int idx = 0; idx < r.dim; ++idx) {
    std::vector<Rat> w = weight_of_index(Hs, idx);
    if (best.empty() || w > best) best = w;
  }
  r.highest_weight.entries = best;
  return r;
}

RepSO restrict_to_indices(const RepSO& full, const std::vector<int>& keep) {
  RepSO r;
  r.algebra = full.algebra;
  r.dim = static_cast<int>(keep.size());
  for (const Mat& g : full.gen) {
    Mat s(r.dim, r.dim);
    for (int i = 0; i < r.dim; ++i)
      for (int j = 0; j < r.dim; ++j) s.at(i, j) = g.at(keep[i], keep[j]);
    r.gen.push_back(std::move(s));
  }
  std::vector<Mat> Hs;
  for (int j = 1; 2 * j <= r.m(); ++j) Hs.push_back(r.H(j));
  std::vector<Rat> best;
  for (int idx = 0; idx < r.dim; ++idx) {
    std::vector<Rat> w = weight_of_index(Hs, idx);
    if (best.empty() || w > best) best = w;
  }
  r.highest_weight.entries = best;
  return r;
}

} // namespace

RepSO spinor_rep(int m) {
  if (m < 2 || m % 2 == 0)
    throw std::invalid_argument("spinor_rep expects odd m >= 3");
  return rep_from_gammas(m);
}

std::pair<RepSO, RepSO> spinor_pair(int m) {
  if (m < 2 || m % 2 == 1)
    throw std::invalid_argument("spinor_pair expects even m >= 2");
  GammaSet g = build_gammas(m);
  RepSO full = rep_from_gammas(m);
  // chirality is diagonal with entries +/-1 in this construction
  std::vector<int> plus, minus;
  for (int i = 0; i < g.N; ++i) {
    const Scalar& x = g.chirality->at(i, i);
    (x == Scalar(1) ? plus : minus).push_back(i);
  }
  return {restrict_to_indices(full, plus), restrict_to_indices(full, minus)};
}

RepSO vector_rep(int m) {
  RepSO r;
  r.algebra = algebra_so(m);
  r.dim = m;
  Scalar i = Scalar::i();
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      Mat g(m, m);
      g.at(a - 1, b - 1) = i;
      g.at(b - 1, a - 1) = -i;
      r.gen.push_back(std::move(g));
    }
  r.highest_weight.entries.assign(r.algebra.rank, Rat(0));
  r.highest_weight.entries[0] = 1;
  return r;
}

namespace {

// Cyclic submodule of a D-series module generated from v0 under all
// lowering operators; generators restricted to the invariant subspace.
RepSO cyclic_submodule(const AlgebraType& alg, const std::vector<Mat>& big_gen,
                       const std::vector<Scalar>& v0) {
  if (alg.series != Series::D)
    throw std::invalid_argument("cyclic submodule machinery covers so(2n) only");
  int big_dim = big_gen.empty() ? static_cast<int>(v0.size())
                                : big_gen[0].rows();
  int mm = alg.m();
  auto Mab = [&](int a, int b) -> Mat {
    if (a == b) return Mat::zero(big_dim);
    if (a < b) return big_gen[pair_index(a, b, mm)];
    return -big_gen[pair_index(b, a, mm)];
  };
  std::vector<Mat> lowering;
  for (int j = 1; j <= alg.rank; ++j)
    for (int k = j + 1; k <= alg.rank; ++k) {
      lowering.push_back(cartan_E_generic(Mab, j, k, -1, -1));
      lowering.push_back(cartan_E_generic(Mab, j, k, -1, +1));
    }

  LinBasis lin(big_dim);
  std::vector<std::vector<Scalar>> basis;
  std::vector<std::vector<Scalar>> queue{v0};
  while (!queue.empty()) {
    std::vector<Scalar> v = std::move(queue.back());
    queue.pop_back();
    if (!lin.try_add(v)) continue;
    basis.push_back(v);
    for (const Mat& L : lowering) queue.push_back(L.apply(v));
  }

  RepSO r;
  r.algebra = alg;
  r.dim = static_cast<int>(basis.size());
  for (const Mat& g : big_gen) {
    Mat s(r.dim, r.dim);
    for (int i = 0; i < r.dim; ++i) {
      std::vector<Scalar> col = lin.coords(g.apply(basis[i]));
      for (int jr = 0; jr < r.dim; ++jr) s.at(jr, i) = col[jr];
    }
    r.gen.push_back(std::move(s));
  }
  // weight of the generating vector
  std::vector<Rat> hw;
  for (int j = 1; j <= alg.rank; ++j) {
    std::vector<Scalar> hv = (-Mab(2 * j - 1, 2 * j)).apply(v0);
    int nz = -1;
    for (size_t i = 0; i < v0.size(); ++i)
      if (!v0[i].is_zero()) { nz = static_cast<int>(i); break; }
    hw.push_back((hv[nz] / v0[nz]).to_rat());
  }
  r.highest_weight.entries = std::move(hw);
  return r;
}

void certify_rep(const RepSO& r, const Weight& expected_hw) {
  if (r.highest_weight.entries != expected_hw.entries)
    throw std::logic_error("cyclic submodule has unexpected top weight");
  if (r.dim != weyl_dim(r.algebra, r.highest_weight))
    throw std::logic_error("cyclic submodule dimension disagrees with Weyl formula");
  Scalar c;
  if (!r.casimir().is_scalar_multiple_of_identity(c) ||
      c != Scalar(casimir_value(r.algebra, r.highest_weight)))
    throw std::logic_error("cyclic submodule Casimir is not the expected scalar");
}

} // namespace

RepSO cartan_power(const RepSO& rep, int k, int size_budget) {
  if (k < 0) throw std::invalid_argument("cartan_power needs k >= 0");
  if (k == 0) return trivial_rep(rep.m());
  if (k == 1) return rep;
  double tensor_dim = 1;
  for (int i = 0; i < k; ++i) tensor_dim *= rep.dim;
  if (tensor_dim > size_budget)
    throw std::length_error("cartan_power exceeds the configured size budget");

  std::vector<Mat> gens = rep.gen;
  int cur_dim = rep.dim;
  for (int step = 1; step < k; ++step) {
    Mat id_cur = Mat::identity(cur_dim);
    Mat id_base = Mat::identity(rep.dim);
    for (size_t p = 0; p < gens.size(); ++p)
      gens[p] = kron(gens[p], id_base) + kron(id_cur, rep.gen[p]);
    cur_dim *= rep.dim;
  }
  int top = rep.top_index();
  int v0_idx = 0;
  for (int i = 0; i < k; ++i) v0_idx = v0_idx * rep.dim + top;
  std::vector<Scalar> v0(cur_dim);
  v0[v0_idx] = Scalar(1);

  RepSO r = cyclic_submodule(rep.algebra, gens, v0);
  Weight expected;
  for (const Rat& x : rep.highest_weight.entries)
    expected.entries.push_back(k * x);
  certify_rep(r, expected);
  return r;
}

RepSO rep_s2mu(int m, const Rat& mu, int size_budget) {
  if (!is_half_integer(mu))
    throw std::invalid_argument("mu must be a half integer");
  if (mu == 0) return trivial_rep(m);
  if (m % 2 == 0) {
    auto [sp, sm] = spinor_pair(m);
    int k = static_cast<int>(to_long(abs(mu) * 2));
    return cartan_power(mu > 0 ? sp : sm, k, size_budget);
  }
  if (mu == Rat(1, 2)) return spinor_rep(m);
  throw std::invalid_argument(
      "so(odd) monopole representation exists only for mu = 0 or 1/2");
}

RepSO tensor_cyclic_top(const RepSO& x, const RepSO& y, int size_budget) {
  if (x.m() != y.m()) throw std::invalid_argument("algebra mismatch");
  if (x.dim * y.dim > size_budget)
    throw std::length_error("tensor product exceeds the configured size budget");
  std::vector<Mat> gens;
  Mat idx = Mat::identity(x.dim), idy = Mat::identity(y.dim);
  for (size_t p = 0; p < x.gen.size(); ++p)
    gens.push_back(kron(x.gen[p], idy) + kron(idx, y.gen[p]));
  std::vector<Scalar> v0(x.dim * y.dim);
  v0[x.top_index() * y.dim + y.top_index()] = Scalar(1);
  RepSO r = cyclic_submodule(x.algebra, gens, v0);
  Weight expected;
  for (int i = 0; i < x.algebra.rank; ++i)
    expected.entries.push_back(x.highest_weight.entries[i] +
                               y.highest_weight.entries[i]);
  certify_rep(r, expected);
  return r;
}

const Mat& CartanBasis::root_op(const RootVec& alpha) const {
  auto it = E.find(alpha);
  if (it == E.end()) throw std::out_of_range("no such root");
  return it->second;
}

Mat CartanBasis::simple_lowering(int j) const {
  RootVec alpha(n, 0);
  if (j < 1 || j > n) throw std::out_of_range("simple root index");
  if (j < n) {
    alpha[j - 1] = -1;
    alpha[j] = +1;  // -(e^j - e^{j+1})
  } else {
    alpha[n - 2] = -1;
    alpha[n - 1] = -1;  // -(e^{n-1} + e^n)
  }
  return root_op(alpha);
}

CartanBasis cartan_basis(const RepSO& rep) {
  if (rep.algebra.series != Series::D)
    throw std::invalid_argument("Cartan basis defined here for so(2n) only");
  CartanBasis cb;
  cb.n = rep.algebra.rank;
  for (int j = 1; j <= cb.n; ++j) cb.H.push_back(rep.H(j));
  auto Mab = [&](int a, int b) { return rep.M(a, b); };
  for (int j = 1; j <= cb.n; ++j)
    for (int k = j + 1; k <= cb.n; ++k)
      for (int eta : {-1, 1})
        for (int etap : {-1, 1}) {
          RootVec alpha(cb.n, 0);
          alpha[j - 1] = eta;
          alpha[k - 1] = etap;
          cb.E[alpha] = cartan_E_generic(Mab, j, k, eta, etap);
        }
  return cb;
}

OOperators build_O_operators(const RepSO& rep) {
  if (rep.algebra.series != Series::D || rep.algebra.rank < 2)
    throw std::invalid_argument("O operators need so(2n) with n >= 2");
  CartanBasis cb = cartan_basis(rep);
  int n = cb.n;
  auto root = [&](int c1, int i, int ci) {
    RootVec a(n, 0);
    a[0] = c1;
    a[i - 1] = ci;
    return a;
  };
  OOperators out;
  out.O = Mat::zero(rep.dim);
  out.O1 = cb.H[0] * cb.H[0];
  Scalar half(Rat(1, 2));
  for (int i = 2; i <= n; ++i) {
    out.O += cb.root_op(root(-1, i, -1)) * cb.root_op(root(-1, i, +1));
    out.O1 += half * (anticommutator(cb.root_op(root(-1, i, -1)),
                                     cb.root_op(root(+1, i, +1))) +
                      anticommutator(cb.root_op(root(-1, i, +1)),
                                     cb.root_op(root(+1, i, -1))));
  }
  out.Odag = out.O.conj_transpose();

  Mat sum_sq = Mat::zero(rep.dim);
  Mat sum_ac = Mat::zero(rep.dim);
  for (int k = 1; k <= rep.m(); ++k) {
    Mat g1k = rep.M(1, k);
    sum_sq += g1k * g1k;
    sum_ac += anticommutator(g1k, rep.M(2, k));
  }
  out.residual_sum_sq = sum_sq - (out.O1 + out.Odag + out.O);
  // (2/i)(Odag - O) = -2i (Odag - O)
  out.residual_anticomm =
      sum_ac - Scalar::complex(0, -2) * (out.Odag - out.O);
  return out;
}

bool CheckReport::pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

CheckReport verify_claim(const RepSO& rep) {
  CheckReport out;
  OOperators ops = build_O_operators(rep);
  int n = rep.algebra.rank;
  Rat mu = abs(rep.highest_weight.entries[0]);
  Rat eig = mu * (n + mu - 1);
  add_item(out, "O = 0", ops.O);
  add_item(out, "Odag = 0", ops.Odag);
  add_item(out, "O1 = mu(n+mu-1) Id",
           ops.O1 - Scalar(eig) * Mat::identity(rep.dim));
  Rat c2 = casimir_value(rep.algebra, rep.highest_weight);
  add_item(out, "mu(n+mu-1) = c2/n", eig == c2 / n,
           rat_str(eig) + " vs " + rat_str(c2 / n));
  add_item(out, "reduction: sum_k (M_1k)^2", ops.residual_sum_sq);
  add_item(out, "reduction: sum_k {M_1k, M_2k}", ops.residual_anticomm);
  return out;
}

CheckReport verify_identity_odd(const RepSO& rep) {
  if (rep.algebra.series != Series::D)
    throw std::invalid_argument("identity applies to so(2n) representations");
  CheckReport out;
  int mm = rep.m();
  int n = rep.algebra.rank;
  Mat two_c2 = Mat::zero(rep.dim);
  for (const Mat& g : rep.gen) two_c2 += Scalar(2) * (g * g);
  for (int i = 1; i <= mm; ++i)
    for (int j = i; j <= mm; ++j) {
      Mat lhs = Mat::zero(rep.dim);
      for (int k = 1; k <= mm; ++k)
        lhs += anticommutator(rep.M(k, i), rep.M(k, j));
      Mat rhs = i == j ? Scalar(Rat(1, n)) * two_c2 : Mat::zero(rep.dim);
      add_item(out,
               "sum_k {M_k" + std::to_string(i) + ", M_k" + std::to_string(j) +
                   "}",
               lhs - rhs);
    }
  return out;
}

CheckReport verify_identity_even(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("identity applies to so(2n-1), m odd >= 3");
  RepSO rep = spinor_rep(m);
  int n = (m + 1) / 2;
  CheckReport out;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      Mat lhs = Mat::zero(rep.dim);
      for (int k = 1; k <= m; ++k)
        lhs += anticommutator(rep.M(k, i), rep.M(k, j));
      Mat rhs = i == j ? Scalar(Rat(n - 1)) * Mat::identity(rep.dim)
                       : Mat::zero(rep.dim);
      add_item(out,
               "sum_k {g_k" + std::to_string(i) + ", g_k" + std::to_string(j) +
                   "}",
               lhs - rhs);
    }
  return out;
}

CheckReport verify_ladder_properties(const RepSO& rep) {
  if (rep.algebra.series != Series::D || rep.algebra.rank < 2)
    throw std::invalid_argument("ladder operators need so(2n) with n >= 2");
  CheckReport out;
  CartanBasis cb = cartan_basis(rep);
  OOperators ops = build_O_operators(rep);
  int n = cb.n;
  Scalar i = Scalar::i();

  // [O, E_{-alpha^j}] = 0 for every simple root
  for (int j = 1; j <= n; ++j)
    add_item(out, "[O, E_{-a" + std::to_string(j) + "}]",
             commutator(ops.O, cb.simple_lowering(j)));

  // lower family O_2..O_n
  std::vector<Mat> Olow(n + 1, Mat::zero(rep.dim));
  Olow[1] = ops.O1;
  if (n >= 2)
    Olow[2] = Scalar(-2) * commutator(ops.O1, cb.simple_lowering(1));
  for (int k = 3; k <= n; ++k)
    Olow[k] = i * commutator(Olow[k - 1], cb.simple_lowering(k - 1));

  // upper family O^{n-1}..O^0
  std::vector<Mat> Oup(n, Mat::zero(rep.dim));
  Oup[n - 1] = -i * commutator(Olow[n - 1], cb.simple_lowering(n));
  for (int k = n - 1; k >= 1; --k)
    Oup[k - 1] = -i * commutator(Oup[k], cb.simple_lowering(k));

  for (int k = 2; k <= n; ++k)
    for (int j = 1; j <= n; ++j) {
      if (k != n - 1 && j != k)
        add_item(out,
                 "[O_" + std::to_string(k) + ", E_{-a" + std::to_string(j) + "}]",
                 commutator(Olow[k], cb.simple_lowering(j)));
      if (k == n - 1 && j != n - 1 && j != n)
        add_item(out,
                 "[O_" + std::to_string(k) + ", E_{-a" + std::to_string(j) + "}]",
                 commutator(Olow[k], cb.simple_lowering(j)));
    }
  for (int k = 0; k <= n - 1; ++k)
    for (int j = 1; j <= n; ++j)
      if (j != k)
        add_item(out,
                 "[O^" + std::to_string(k) + ", E_{-a" + std::to_string(j) + "}]",
                 commutator(Oup[k], cb.simple_lowering(j)));

  add_item(out, "O^0 = 4i O", Oup[0] - Scalar::complex(0, 4) * ops.O);

  int top = rep.top_index();
  std::vector<Scalar> vtop(rep.dim);
  vtop[top] = Scalar(1);
  auto annihilates = [&](const Mat& op) {
    for (const Scalar& x : op.apply(vtop))
      if (!x.is_zero()) return false;
    return true;
  };
  for (int k = 2; k <= n; ++k)
    add_item(out, "O_" + std::to_string(k) + " |top> = 0", annihilates(Olow[k]),
             "nonzero image");
  for (int k = 0; k <= n - 1; ++k)
    add_item(out, "O^" + std::to_string(k) + " |top> = 0", annihilates(Oup[k]),
             "nonzero image");
  return out;
}

ProbeReport conjecture_probe(const RepSO& rep) {
  ProbeReport out;
  CheckReport chk = verify_identity_odd(rep);
  out.residual_zero = chk.pass();
  for (const auto& item : chk.items)
    if (!item.pass) {
      out.max_residual = item.residual;
      break;
    }
  return out;
}

} // namespace micz
