// Command-line front end: every verification suite plus the exact spectrum
// tables, with deterministic seeds and machine-readable output.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "micz/clifford.hpp"
#include "micz/monopole.hpp"
#include "micz/operators.hpp"
#include "micz/repcalc.hpp"
#include "micz/sampling.hpp"
#include "micz/spectrum.hpp"
#include "micz/spinrep.hpp"

using json = nlohmann::ordered_json;
using namespace micz;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct Row {
  std::string suite;
  std::string what;
  bool pass = true;
  std::string note;
};

struct Report {
  std::vector<Row> rows;

  bool pass() const {
    for (const Row& r : rows)
      if (!r.pass) return false;
    return true;
  }
  void add(const std::string& suite, const std::string& what, bool ok,
           const std::string& note = "") {
    rows.push_back({suite, what, ok, note});
  }
  void add(const std::string& suite, const CheckReport& rep) {
    for (const CheckItem& it : rep.items)
      rows.push_back({suite, it.what, it.pass, it.residual});
  }
  void add(const std::string& suite, const IdentityReport& rep) {
    std::string note;
    if (!rep.pass && !rep.max_residual_entries.empty())
      note = rep.max_residual_entries.front();
    rows.push_back({suite, rep.identity, rep.pass, note});
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_report(const Report& rep, const std::string& format) {
  if (format == "json") {
    json checks = json::array();
    for (const Row& r : rep.rows) {
      json j{{"suite", r.suite}, {"what", r.what}, {"pass", r.pass}};
      if (!r.note.empty()) j["residual"] = r.note;
      checks.push_back(std::move(j));
    }
    std::cout << json{{"pass", rep.pass()}, {"checks", checks}}.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "suite,check,pass,residual\n";
    for (const Row& r : rep.rows)
      std::cout << csv_field(r.suite) << "," << csv_field(r.what) << ","
                << (r.pass ? "pass" : "fail") << "," << csv_field(r.note)
                << "\n";
  } else {
    std::string last;
    for (const Row& r : rep.rows) {
      if (r.suite != last) {
        std::cout << r.suite << "\n";
        last = r.suite;
      }
      std::cout << "  " << (r.pass ? "pass" : "FAIL") << "  " << r.what;
      if (!r.note.empty()) std::cout << "  [" << r.note << "]";
      std::cout << "\n";
    }
    std::cout << (rep.pass() ? "all checks passed" : "FAILURES present")
              << "\n";
  }
}

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) out += ",";
    out += rat_str(w.entries[i]);
  }
  return out + ")";
}

// ---- suites ---------------------------------------------------------------

void clifford_suite(Report& rep, int dmax) {
  for (int d = 2; d <= dmax; ++d) {
    std::string suite = "clifford d=" + std::to_string(d);
    GammaSet g = build_gammas(d);
    Mat two_id = Scalar(2) * Mat::identity(g.N);
    bool anti = true, herm = true;
    for (int a = 1; a <= d && anti; ++a)
      for (int b = a; b <= d && anti; ++b) {
        Mat ac = anticommutator(g.gamma[a - 1], g.gamma[b - 1]);
        anti = a == b ? ac == two_id : ac.is_zero();
      }
    for (int a = 1; a <= d; ++a)
      herm = herm && g.gamma[a - 1] == g.gamma[a - 1].conj_transpose();
    if (g.chirality)
      herm = herm && *g.chirality == g.chirality->conj_transpose();
    rep.add(suite, "anticommutation relations", anti);
    rep.add(suite, "hermiticity", herm);
    SoCommReport so = verify_so_commutators(g);
    rep.add(suite, "so(d) commutator table", so.pass,
            so.pass ? "" : so.failures.front().residual_entry);
    Scalar factor;
    bool cas = casimir_matrix(g).is_scalar_multiple_of_identity(factor) &&
               factor == Scalar(rat(static_cast<long>(d) * (d - 1), 8));
    rep.add(suite, "casimir = d(d-1)/8", cas);
  }
}

void rep_suite(Report& rep, int D, const Rat& mu, int budget) {
  std::string suite =
      "rep D=" + std::to_string(D) + " mu=" + rat_str(mu);
  RepSO r = rep_s2mu(D - 1, mu, budget);
  SoCommReport so = verify_so_commutators(r.m(), r.gen);
  rep.add(suite, "commutator table", so.pass,
          so.pass ? "" : so.failures.front().residual_entry);
  bool diag = true;
  for (int j = 1; 2 * j <= r.m(); ++j) {
    Mat h = r.H(j);
    for (int a = 0; a < h.rows() && diag; ++a)
      for (int b = 0; b < h.cols() && diag; ++b)
        if (a != b && !h.at(a, b).is_zero()) diag = false;
  }
  rep.add(suite, "cartan generators diagonal", diag);
  std::vector<Rat> hw(r.m() / 2, abs(mu));
  if (!hw.empty() && mu < 0) hw.back() = mu;
  rep.add(suite, "highest weight", r.highest_weight.entries == hw,
          weight_str(r.highest_weight));
  IrrepLabel lab = make_label(r.algebra, r.highest_weight);
  rep.add(suite, "dimension matches Weyl formula", lab.dim == r.dim,
          "dim=" + std::to_string(r.dim));
  Scalar factor;
  bool cas = r.casimir().is_scalar_multiple_of_identity(factor) &&
             factor == Scalar(cbar2_value(D, mu));
  rep.add(suite, "casimir matches closed form", cas,
          "cbar2=" + rat_str(cbar2_value(D, mu)));
}

void monopole_suite(Report& rep, int D, const Rat& mu, int points,
                    std::uint64_t seed, int budget) {
  std::string suite =
      "monopole D=" + std::to_string(D) + " mu=" + rat_str(mu);
  RepSO r = rep_s2mu(D - 1, mu, budget);
  std::vector<FieldPoint> pts = sample_points(D, points, seed);
  for (const IdentityReport& ir : check_lemma_part1(r, D, pts))
    rep.add(suite, ir);
  rep.add(suite, check_curvature_crosscheck(r, D, pts));
  if (D % 2 == 1)
    rep.add(suite, check_lemma_part2(D / 2, mu, pts));
  else
    rep.add(suite, check_lemma_part3(D / 2, pts));
}

void operators_suite(Report& rep, int D, const Rat& mu, int points,
                     int sections, int order, std::uint64_t seed, int budget) {
  std::string suite =
      "operators D=" + std::to_string(D) + " mu=" + rat_str(mu);
  ProblemSpec spec = make_problem(D, mu, budget);
  std::vector<FieldPoint> pts = sample_points(D, points, seed);
  std::vector<std::vector<Poly>> secs =
      sample_sections(D, spec.rep.dim, sections, 2, seed + 1);
  for (Relation rel : {Relation::LabH, Relation::LabLab, Relation::LabL,
                       Relation::LH, Relation::LL}) {
    (void)order;  // section order is chosen per relation inside the check
    rep.add(suite + " " + relation_name(rel),
            check_symmetry_algebra(spec, pts, secs, rel));
  }
  rep.add(suite + " LL-square", check_lrl_square(spec, pts, secs));
}

void claim_suite(Report& rep, int m, const Rat& mu, int budget) {
  std::string suite =
      "claim so(" + std::to_string(m) + ") mu=" + rat_str(mu);
  RepSO r = rep_s2mu(m, mu, budget);
  rep.add(suite, verify_claim(r));
  rep.add(suite, verify_identity_odd(r));
  rep.add(suite + " spinor identity", verify_identity_even(m - 1));
}

void ladder_suite(Report& rep, int m, const Rat& mu, int budget) {
  std::string suite =
      "ladder so(" + std::to_string(m) + ") mu=" + rat_str(mu);
  rep.add(suite, verify_ladder_properties(rep_s2mu(m, mu, budget)));
}

void probe_suite(Report& rep, int m, const std::string& kind, const Rat& mu,
                 int budget) {
  RepSO r = kind == "vector" ? vector_rep(m) : rep_s2mu(m, mu, budget);
  std::string suite = "conjecture-probe so(" + std::to_string(m) + ") " +
                      (kind == "vector" ? "vector" : "s^" + rat_str(2 * mu));
  ProbeReport pr = conjecture_probe(r);
  // Evidence gathering: the outcome is recorded, never asserted.
  rep.add(suite, "anticommutator identity residual", true,
          pr.residual_zero ? "zero" : "nonzero: " + pr.max_residual);
}

bool spectrum_verify(Report& rep, int D, const Rat& mu, int Imax) {
  std::string suite =
      "spectrum D=" + std::to_string(D) + " mu=" + rat_str(mu);
  bool all = true;
  for (const LevelSpectrum& lev : level_table(D, mu, Imax)) {
    bool ok = lev.consistent && casimir_hamiltonian_check(D, mu, lev.I);
    for (const Constituent& c : lev.constituents)
      ok = ok && verify_radial_ode(radial_coeffs(D, mu, c.k, c.l));
    rep.add(suite, "level I=" + std::to_string(lev.I), ok,
            "E=" + rat_str(lev.energy) +
                " deg=" + std::to_string(lev.degeneracy));
    all = all && ok;
  }
  return all;
}

// ---- spectrum / level-table output ----------------------------------------

json level_json(const LevelSpectrum& lev, bool constituents) {
  json weights = json::array();
  for (const Rat& e : lev.irrep.highest_weight.entries)
    weights.push_back(rat_str(e));
  json out{{"I", lev.I},
           {"E", rat_str(lev.energy)},
           {"weight", weights},
           {"degeneracy", lev.degeneracy}};
  if (constituents) {
    json cons = json::array();
    for (const Constituent& c : lev.constituents)
      for (const IrrepLabel& lab : c.irreps) {
        json w = json::array();
        for (const Rat& e : lab.highest_weight.entries)
          w.push_back(rat_str(e));
        cons.push_back(
            {{"k", c.k}, {"l", c.l}, {"weight", w}, {"dim", lab.dim}});
      }
    out["constituents"] = std::move(cons);
  }
  return out;
}

void emit_levels(int D, const Rat& mu, const std::vector<LevelSpectrum>& levs,
                 const std::string& format, bool constituents) {
  if (format == "json") {
    json jl = json::array();
    for (const LevelSpectrum& lev : levs)
      jl.push_back(level_json(lev, constituents));
    std::cout << json{{"D", D}, {"mu", rat_str(mu)}, {"levels", jl}}.dump(2)
              << "\n";
    return;
  }
  if (format == "csv") {
    if (constituents) {
      std::cout << "D,mu,I,E,weight,degeneracy,k,l,constituent_weight,"
                   "constituent_dim\n";
      for (const LevelSpectrum& lev : levs)
        for (const Constituent& c : lev.constituents)
          for (const IrrepLabel& lab : c.irreps)
            std::cout << D << "," << rat_str(mu) << "," << lev.I << ","
                      << rat_str(lev.energy) << ","
                      << csv_field(weight_str(lev.irrep.highest_weight)) << ","
                      << lev.degeneracy << "," << c.k << "," << c.l << ","
                      << csv_field(weight_str(lab.highest_weight)) << ","
                      << lab.dim << "\n";
    } else {
      std::cout << "D,mu,I,E,weight,degeneracy\n";
      for (const LevelSpectrum& lev : levs)
        std::cout << D << "," << rat_str(mu) << "," << lev.I << ","
                  << rat_str(lev.energy) << ","
                  << csv_field(weight_str(lev.irrep.highest_weight)) << ","
                  << lev.degeneracy << "\n";
    }
    return;
  }
  std::cout << "D=" << D << " mu=" << rat_str(mu) << "\n";
  for (const LevelSpectrum& lev : levs) {
    std::cout << "I=" << lev.I << "  E=" << rat_str(lev.energy)
              << "  weight=" << weight_str(lev.irrep.highest_weight)
              << "  degeneracy=" << lev.degeneracy << "\n";
    if (constituents)
      for (const Constituent& c : lev.constituents)
        for (const IrrepLabel& lab : c.irreps)
          std::cout << "    k=" << c.k << " l=" << c.l
                    << " weight=" << weight_str(lab.highest_weight)
                    << " dim=" << lab.dim << "\n";
  }
}

std::vector<Rat> allowed_mus(int D, const Rat& bound) {
  std::vector<Rat> out;
  if (D % 2 == 0) {
    out.push_back(Rat(0));
    out.push_back(rat(1, 2));
    return out;
  }
  for (Rat mu = -bound; mu <= bound; mu += rat(1, 2)) out.push_back(mu);
  return out;
}

int require_admissible(int D, const Rat& mu) {
  if (D < 3) {
    std::cerr << "error: dimension must be at least 3\n";
    return kExitInvalid;
  }
  if (!mu_allowed(D, mu)) {
    std::cerr << "error: magnetic charge " << rat_str(mu)
              << " is not admissible in dimension " << D
              << (D % 2 == 0
                      ? " (even dimensions require mu = 0 or 1/2)"
                      : " (mu must be a half integer)")
              << "\n";
    return kExitInvalid;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites and bound-state spectrum tables for "
               "the generalized Kepler problems with a Yang monopole"};
  app.require_subcommand(1);

  int dim = 0;
  std::string mu_str = "0";
  std::uint64_t seed = 1;
  int points = 20, sections = 3, order = 0, levels = 4, budget = 4096;
  std::string format = "text", probe_rep = "vector";

  auto add_common = [&](CLI::App* sub, bool needs_dim) {
    auto* d = sub->add_option("--dim,-d", dim, "ambient dimension D");
    if (needs_dim) d->required();
    sub->add_option("--mu,-m", mu_str,
                    "magnetic charge, an exact fraction like 1/2")
        ->capture_default_str();
    sub->add_option("--seed", seed, "sampling seed")->capture_default_str();
    sub->add_option("--size-budget", budget,
                    "largest tensor space the representation builder accepts")
        ->envname("MICZ_SIZE_BUDGET")
        ->capture_default_str();
    sub->add_option("--format,-f", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    return sub;
  };

  auto* c_cliff = app.add_subcommand(
      "verify-clifford", "gamma matrices: relations, hermiticity, "
                         "commutator table, casimir, for d = 2..dim");
  c_cliff->add_option("--dim,-d", dim, "largest Clifford dimension")
      ->default_val(8);
  c_cliff->add_option("--format,-f", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  auto* c_mono = add_common(
      app.add_subcommand("verify-monopole",
                         "gauge field identities at seeded rational points"),
      true);
  c_mono->add_option("--points,-p", points, "number of sample points")
      ->capture_default_str();

  auto* c_ops = add_common(
      app.add_subcommand("verify-operators",
                         "dynamical and hidden symmetry commutation relations "
                         "on polynomial section germs"),
      true);
  c_ops->add_option("--points,-p", points, "number of base points")
      ->default_val(5);
  c_ops->add_option("--sections,-s", sections, "number of section germs")
      ->capture_default_str();
  c_ops->add_option("--order,-o", order,
                    "jet order for section germs (0 = minimal per relation)")
      ->capture_default_str();

  add_common(app.add_subcommand(
                 "verify-rep", "monopole representation: commutator table, "
                               "hermiticity, dimension, casimir"),
             true);

  add_common(app.add_subcommand("verify-claim",
                                "ladder-bottom operators O, Odag, O1 on the "
                                "Young power s^{2mu} of so(dim), dim even"),
             true);

  add_common(app.add_subcommand("verify-ladder",
                                "ladder operator family built from O1 on "
                                "s^{2mu} of so(dim), dim even"),
             true);

  auto* c_probe = add_common(
      app.add_subcommand("conjecture-probe",
                         "record the anticommutator identity residual in a "
                         "chosen representation of so(dim)"),
      true);
  c_probe->add_option("--rep", probe_rep, "representation family")
      ->check(CLI::IsMember({"vector", "s2mu"}))
      ->capture_default_str();

  auto* c_spec = add_common(
      app.add_subcommand("spectrum",
                         "bound-state levels with constituents, verified by "
                         "recursion, theorem formula and casimir relation"),
      true);
  c_spec->add_option("--levels,-I", levels, "largest level index I")
      ->capture_default_str();

  auto* c_table = add_common(
      app.add_subcommand("level-table", "energy/degeneracy table only"), true);
  c_table->add_option("--levels,-I", levels, "largest level index I")
      ->capture_default_str();

  auto* c_all = add_common(
      app.add_subcommand("all", "full verification matrix: D in 3..7, "
                                "admissible |mu| <= 3/2, levels I <= 4"),
      false);
  c_all->add_option("--points,-p", points, "points per monopole suite")
      ->default_val(5);

  CLI11_PARSE(app, argc, argv);

  Rat mu;
  try {
    mu = parse_rat(mu_str);
  } catch (const std::invalid_argument&) {
    std::cerr << "error: --mu expects an exact fraction like -3/2\n";
    return kExitInvalid;
  }
  if (!is_half_integer(mu)) {
    std::cerr << "error: magnetic charge must be a half integer\n";
    return kExitInvalid;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  Report rep;

  try {
    if (cmd == "verify-clifford") {
      if (dim < 2) {
        std::cerr << "error: Clifford dimension must be at least 2\n";
        return kExitInvalid;
      }
      clifford_suite(rep, dim);
    } else if (cmd == "verify-monopole" || cmd == "verify-rep" ||
               cmd == "verify-operators" || cmd == "spectrum" ||
               cmd == "level-table") {
      if (int rc = require_admissible(dim, mu)) return rc;
      if (cmd == "verify-monopole")
        monopole_suite(rep, dim, mu, points, seed, budget);
      else if (cmd == "verify-rep")
        rep_suite(rep, dim, mu, budget);
      else if (cmd == "verify-operators")
        operators_suite(rep, dim, mu, points, sections, order, seed, budget);
      else {
        std::vector<LevelSpectrum> levs = level_table(dim, mu, levels);
        bool ok = true;
        if (cmd == "spectrum") {
          Report check;
          ok = spectrum_verify(check, dim, mu, levels);
        }
        emit_levels(dim, mu, levs, format, cmd == "spectrum");
        return ok ? 0 : kExitFail;
      }
    } else if (cmd == "verify-claim" || cmd == "verify-ladder" ||
               cmd == "conjecture-probe") {
      if (dim < 4 || dim % 2 != 0) {
        std::cerr << "error: this suite needs so(2n) with n >= 2; pass an "
                     "even --dim >= 4\n";
        return kExitInvalid;
      }
      if (cmd == "verify-claim")
        claim_suite(rep, dim, mu, budget);
      else if (cmd == "verify-ladder")
        ladder_suite(rep, dim, mu, budget);
      else
        probe_suite(rep, dim, probe_rep, mu, budget);
    } else {  // all
      clifford_suite(rep, 8);
      for (int D = 3; D <= 7; ++D)
        for (const Rat& m : allowed_mus(D, rat(3, 2))) {
          rep_suite(rep, D, m, budget);
          monopole_suite(rep, D, m, points, seed, budget);
          spectrum_verify(rep, D, m, 4);
        }
      for (auto [D, num2] : {std::pair{3, 0}, {3, 1}, {3, 2}, {4, 0},
                             {4, 1}, {5, 0}, {5, 1}, {5, 2}})
        operators_suite(rep, D, rat(num2, 2), 1, 1, 0, seed, budget);
      for (int m : {4, 6})
        for (int num2 : {1, 2, 3}) {
          claim_suite(rep, m, rat(num2, 2), budget);
          ladder_suite(rep, m, rat(num2, 2), budget);
        }
      probe_suite(rep, 4, "vector", Rat(0), budget);
    }
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  emit_report(rep, format);
  return rep.pass() ? 0 : kExitFail;
}
