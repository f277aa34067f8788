#pragma once

#include <string>
#include <vector>

#include "micz/monopole.hpp"
#include "micz/sampling.hpp"
#include "micz/spinrep.hpp"

namespace micz {

/// A D-dimensional MICZ-Kepler problem with magnetic charge mu: sections of
/// the monopole representation s^{2 mu} of so(D-1), hamiltonian
/// h = -(1/2) nabla.nabla + delta/(2 r^2) - 1/r.
struct ProblemSpec {
  int D = 0;
  int n = 0;  // D = 2n or 2n+1
  Rat mu;
  Rat delta;  // (n-1) mu for D = 2n, (n-1)|mu| + mu^2 for D = 2n+1
  Rat cbar2;  // c_2[so(D-1)] on s^{2 mu}
  RepSO rep;
};

ProblemSpec make_problem(int D, const Rat& mu, int size_budget = 4096);

/// A section germ: one jet per representation component, all at the same
/// base point.
using SectionJet = std::vector<Jet>;

/// Differential operators of the problem acting on section jets at a fixed
/// base point.  Gauge data is precomputed as order-4 jets; every application
/// truncates to the order the input jet actually supports (one order is lost
/// per derivative taken).
class OperatorContext {
 public:
  OperatorContext(const ProblemSpec& spec, const FieldPoint& base);

  const ProblemSpec& spec() const { return spec_; }

  SectionJet section(const std::vector<Poly>& polys, int order) const;

  /// nabla_al = d_al + i A_al.
  SectionJet nabla(int al, const SectionJet& s) const;
  /// h = -(1/2) nabla.nabla + delta/(2 r^2) - 1/r.
  SectionJet hamiltonian(const SectionJet& s) const;
  /// L_{al be} = -i (x_al nabla_be - x_be nabla_al) + r^2 F_{al be}.
  SectionJet angular(int al, int be, const SectionJet& s) const;
  /// L_be = -(i/2)(nabla_al L_{al be} + L_{al be} nabla_al) + x_be / r.
  SectionJet runge_lenz(int be, const SectionJet& s) const;

 private:
  SectionJet apply_alg(const std::vector<Jet>& coords, const SectionJet& s) const;

  ProblemSpec spec_;
  std::vector<Rat> base_;
  std::vector<Jet> xjet_;
  Jet inv_r_, inv_r2_;
  std::vector<std::vector<Jet>> acoords_;                // [mu][pair]
  std::vector<std::vector<std::vector<Jet>>> r2fcoords_; // [mu][nu][pair], mu < nu
};

enum class Relation { LabH, LabLab, LabL, LH, LL };

std::string relation_name(Relation rel);
/// Smallest input jet order that leaves an order-0 result to compare.
int relation_input_order(Relation rel);

/// One commutation relation of the dynamical algebra, verified exactly on
/// polynomial section germs at the given points.
CheckReport check_symmetry_algebra(const ProblemSpec& spec,
                                   const std::vector<FieldPoint>& points,
                                   const std::vector<std::vector<Poly>>& sections,
                                   Relation rel);

/// L_mu L_mu = 1 + ((1/2)(D-1)^2 - 2 cbar2 + J_{mu nu} J_{mu nu}) h with
/// J_{mu nu} J_{mu nu} = 2 sum_{mu<nu} L_{mu nu} L_{mu nu}.
CheckReport check_lrl_square(const ProblemSpec& spec,
                             const std::vector<FieldPoint>& points,
                             const std::vector<std::vector<Poly>>& sections);

} // namespace micz
