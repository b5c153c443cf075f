#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jonesdeg/diagram.hpp"
#include "jonesdeg/jones.hpp"
#include "jonesdeg/laurent.hpp"

namespace jonesdeg {

/// Circles of the all-A / all-B state.
int v_a(const LinkDiagram& d);
int v_b(const LinkDiagram& d);

bool is_A_adequate(const LinkDiagram& d);
/// A-adequacy of the mirror, cross-checked against the all-B graph;
/// throws InvariantViolation if the two disagree.
bool is_B_adequate(const LinkDiagram& d);

/// 2 c_- n^2 + 2 (v_A - w) n - 2.
int h_n(const LinkDiagram& d, int n);
/// -h_n(mirror(d)), the bound for the lowest degree.
int h_star_n(const LinkDiagram& d, int n);

struct DegreeCeilings {
  int M = 0;  // e(G_A) + 2 v(G_A) - 2
  int m = 0;  // -e(G_B) - 2 v(G_B) + 2
};
DegreeCeilings degree_ceilings(const LinkDiagram& d);

Complexity complexity(const LinkDiagram& d);

/// Top coefficients of the bracket of D^n: a_M at M(D^n) and a_{M-1} at
/// M(D^n) - 4, with M(D^n) taken from the all-A graph of the cable.
struct CableExtremes {
  int n = 0;
  int M = 0;
  BigInt a_M;
  BigInt a_M1;
  bool stride_ok = true;
};
CableExtremes cable_extremes(CableCache& cache, int n);

enum class Verdict { pass, fail, not_applicable };
const char* verdict_name(Verdict v) noexcept;

struct LemmaChecks {
  std::vector<CableExtremes> extremes;  // n = 1..n_max
  /// a_M(D^n) vanishes for every computed n > 1 exactly when d is not A-adequate.
  Verdict vanishing = Verdict::not_applicable;
  /// a_{M-1}(D^n) = 0 for the computed n > 2; asserted only when a_M(D) != 0
  /// and d is not A-adequate.
  Verdict second_vanishing = Verdict::not_applicable;
};
LemmaChecks lemma_checks(CableCache& cache, int n_max);

struct TheoremCheck {
  int n = 0;
  int h = 0;
  int d = 0;           // max A-degree of G_D(n+1, A)
  BigInt coeff_at_h;   // coefficient of A^h in G_D(n+1, A)
  bool degree_equal = false;
  bool a_adequate = false;
  bool agrees = false;
  int h_star = 0;
  int d_star = 0;      // min A-degree of G_D(n+1, A)
  bool b_side_equal = false;
  bool b_adequate = false;
  bool b_agrees = false;
};
TheoremCheck theorem_check(CableCache& cache, int n);

struct TInvariant {
  int n = 0;
  BigInt alpha;
  BigInt beta;
  /// alpha + beta q.
  LaurentPoly T;
};
/// Requires n > 2.
TInvariant t_invariant(CableCache& cache, int n);

/// beta_1 = coeff of A^(h_2) in G_D(3, A); beta_i = coeff of
/// A^(h_(i+1) - 4(i-1)) in G_D(i+2, A).
std::vector<BigInt> j0_prefix(CableCache& cache, int k);

struct ReportConfig {
  int n_max = 2;
  int series = 0;
  Engine engine = Engine::fast;
  BracketOptions bracket;
};

struct AdequacyReport {
  std::string pd;
  int crossings = 0;
  int positive = 0;
  int negative = 0;
  int writhe = 0;
  int components = 0;
  int v_a = 0;
  int v_b = 0;
  bool a_adequate = false;
  bool b_adequate = false;
  Complexity complexity;
  DegreeCeilings ceilings;
  LaurentPoly bracket;
  int bracket_max = 0;
  int bracket_min = 0;
  bool ceiling_ok = true;
  std::map<int, int> h;
  std::map<int, int> h_star;
  std::map<int, DeltaFraction> G;
  std::map<int, int> d_actual;
  std::map<int, int> d_star;
  std::map<int, bool> d_le_h;
  std::vector<TheoremCheck> theorem;
  LemmaChecks lemmas;
  std::vector<TInvariant> t;
  std::vector<BigInt> beta_series;
  std::vector<std::string> notes;
  /// Named invariants that failed; empty when every check passed.
  std::vector<std::string> failures;
};

/// Everything above for one nonempty diagram. Throws ResourceLimit when a
/// requested cable is out of reach.
AdequacyReport adequacy_report(const LinkDiagram& d, const ReportConfig& cfg);

}  // namespace jonesdeg
