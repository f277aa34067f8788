#include "micz/clifford.hpp"

#include <functional>
#include <stdexcept>

namespace micz {

namespace {

Mat pauli_x() {
  Mat m(2, 2);
  m.at(0, 1) = Scalar(1);
  m.at(1, 0) = Scalar(1);
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m.at(0, 1) = Scalar::complex(0, -1);
  m.at(1, 0) = Scalar::complex(0, 1);
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m.at(0, 0) = Scalar(1);
  m.at(1, 1) = Scalar(-1);
  return m;
}

} // namespace

GammaSet build_gammas(int d) {
  if (d < 2) throw std::invalid_argument("build_gammas requires d >= 2");
  GammaSet g;
  g.d = 2;
  g.N = 2;
  g.gamma = {pauli_x(), pauli_y()};
  g.chirality = pauli_z();
  while (g.d + 2 <= d) {
    GammaSet next;
    next.d = g.d + 2;
    next.N = 2 * g.N;
    Mat id = Mat::identity(g.N);
    for (const Mat& ga : g.gamma) next.gamma.push_back(kron(pauli_x(), ga));
    next.gamma.push_back(kron(pauli_x(), *g.chirality));
    next.gamma.push_back(kron(pauli_y(), id));
    next.chirality = kron(pauli_z(), id);
    g = std::move(next);
  }
  if (g.d < d) {
    // Odd d: the chirality of the even set below becomes the last gamma.
    g.gamma.push_back(*g.chirality);
    g.chirality.reset();
    g.d = d;
  }
  return g;
}

Mat gamma_ab(const GammaSet& g, int a, int b) {
  if (a < 1 || a > g.d || b < 1 || b > g.d)
    throw std::out_of_range("gamma index out of range");
  if (a == b) return Mat::zero(g.N);
  Scalar i_over_4 = Scalar::complex(0, Rat(1, 4));
  return i_over_4 * commutator(g.gamma[a - 1], g.gamma[b - 1]);
}

Mat casimir_matrix(const GammaSet& g) {
  Mat c = Mat::zero(g.N);
  for (int a = 1; a <= g.d; ++a)
    for (int b = 1; b <= g.d; ++b) {
      if (a == b) continue;
      Mat gab = gamma_ab(g, a, b);
      c += gab * gab;
    }
  return Scalar(Rat(1, 2)) * c;
}

int pair_index(int a, int b, int m) {
  if (!(1 <= a && a < b && b <= m))
    throw std::out_of_range("bad generator pair index");
  return (a - 1) * (2 * m - a) / 2 + (b - a - 1);
}

int pair_count(int m) { return m * (m - 1) / 2; }

namespace {

SoCommReport verify_comm_table(
    int m, const std::function<Mat(int, int)>& gen) {
  SoCommReport rep;
  Scalar I = Scalar::i();
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c)
        for (int d = 1; d <= m; ++d) {
          Mat lhs = commutator(gen(a, b), gen(c, d));
          Mat rhs = Mat::zero(lhs.rows());
          if (b == c) rhs += I * gen(a, d);
          if (a == c) rhs -= I * gen(b, d);
          if (b == d) rhs += I * gen(c, a);
          if (a == d) rhs -= I * gen(c, b);
          Mat res = lhs - rhs;
          if (!res.is_zero()) {
            rep.pass = false;
            std::string entry;
            for (int r = 0; r < res.rows() && entry.empty(); ++r)
              for (int cc = 0; cc < res.cols(); ++cc)
                if (!res.at(r, cc).is_zero()) {
                  entry = res.at(r, cc).str();
                  break;
                }
            rep.failures.push_back({a, b, c, d, entry});
          }
        }
  return rep;
}

} // namespace

SoCommReport verify_so_commutators(const GammaSet& g) {
  std::vector<Mat> gen;
  gen.reserve(pair_count(g.d));
  for (int a = 1; a <= g.d; ++a)
    for (int b = a + 1; b <= g.d; ++b) gen.push_back(gamma_ab(g, a, b));
  return verify_so_commutators(g.d, gen);
}

SoCommReport verify_so_commutators(int m, const std::vector<Mat>& gen_upper) {
  if (static_cast<int>(gen_upper.size()) != pair_count(m))
    throw std::invalid_argument("generator list size mismatch");
  int N = m >= 2 ? gen_upper[0].rows() : 1;
  return verify_comm_table(m, [&](int a, int b) -> Mat {
    if (a == b) return Mat::zero(N);
    if (a < b) return gen_upper[pair_index(a, b, m)];
    return -gen_upper[pair_index(b, a, m)];
  });
}

} // namespace micz
