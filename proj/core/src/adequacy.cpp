#include "jonesdeg/adequacy.hpp"

#include <stdexcept>

#include "jonesdeg/error.hpp"
#include "jonesdeg/states.hpp"

namespace jonesdeg {

int v_a(const LinkDiagram& d) { return count_circles(d, KauffmanState::all(d.crossing_count(), Smoothing::A)); }
int v_b(const LinkDiagram& d) { return count_circles(d, KauffmanState::all(d.crossing_count(), Smoothing::B)); }

bool is_A_adequate(const LinkDiagram& d) { return !has_one_edge_loop(ribbon_graph_a(d)); }

bool is_B_adequate(const LinkDiagram& d) {
  const bool via_mirror = is_A_adequate(mirror(d));
  const bool direct = !has_one_edge_loop(ribbon_graph_b(d));
  if (via_mirror != direct) {
    throw InvariantViolation("B-adequacy of the diagram disagrees with A-adequacy of its mirror");
  }
  return direct;
}

int h_n(const LinkDiagram& d, int n) {
  return 2 * d.negative_crossings() * n * n + 2 * (v_a(d) - writhe(d)) * n - 2;
}

int h_star_n(const LinkDiagram& d, int n) { return -h_n(mirror(d), n); }

DegreeCeilings degree_ceilings(const LinkDiagram& d) {
  const int c = d.crossing_count();
  return {c + 2 * v_a(d) - 2, -c - 2 * v_b(d) + 2};
}

Complexity complexity(const LinkDiagram& d) {
  return {d.negative_crossings(), d.crossing_count(), v_a(d) - writhe(d)};
}

CableExtremes cable_extremes(CableCache& cache, int n) {
  if (n < 1) throw std::invalid_argument("cable_extremes: n must be >= 1");
  CableExtremes out;
  out.n = n;
  const LinkDiagram& cab = cache.cable(n);
  out.M = degree_ceilings(cab).M;
  const ExtremeCoeffs ex = extreme_coeffs(cache.normalized(n), out.M, 1);
  out.a_M = ex.coeffs[0];
  out.a_M1 = ex.coeffs[1];
  out.stride_ok = ex.stride_ok;
  return out;
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "n/a";
  }
  return "n/a";
}

LemmaChecks lemma_checks(CableCache& cache, int n_max) {
  LemmaChecks out;
  const bool adequate = is_A_adequate(cache.diagram());
  for (int n = 1; n <= n_max; ++n) out.extremes.push_back(cable_extremes(cache, n));
  if (n_max >= 2) {
    bool ok = true;
    for (const auto& ex : out.extremes) {
      if (ex.n < 2) continue;
      if (adequate ? (ex.a_M == 0) : (ex.a_M != 0)) ok = false;
    }
    out.vanishing = ok ? Verdict::pass : Verdict::fail;
  }
  if (n_max >= 3 && !adequate && out.extremes.front().a_M != 0) {
    bool ok = true;
    for (const auto& ex : out.extremes) {
      if (ex.n >= 3 && ex.a_M1 != 0) ok = false;
    }
    out.second_vanishing = ok ? Verdict::pass : Verdict::fail;
  }
  return out;
}

TheoremCheck theorem_check(CableCache& cache, int n) {
  const LinkDiagram& d = cache.diagram();
  const DeltaFraction g = unreduced(cache, n);
  if (g.is_zero()) throw InvariantViolation("colored Jones function vanished");
  TheoremCheck t;
  t.n = n;
  t.h = h_n(d, n);
  t.d = g.max_degree();
  t.coeff_at_h = g.coeff_descending(t.h);
  t.degree_equal = t.d == t.h;
  t.a_adequate = is_A_adequate(d);
  t.agrees = t.degree_equal == t.a_adequate;
  t.h_star = h_star_n(d, n);
  t.d_star = g.min_degree();
  t.b_side_equal = t.d_star == t.h_star;
  t.b_adequate = is_B_adequate(d);
  t.b_agrees = t.b_side_equal == t.b_adequate;
  return t;
}

TInvariant t_invariant(CableCache& cache, int n) {
  if (n <= 2) throw std::invalid_argument("t_invariant needs n > 2");
  const CableExtremes base = cable_extremes(cache, 1);
  const CableExtremes top = cable_extremes(cache, n);
  TInvariant t;
  t.n = n;
  t.alpha = abs(base.a_M * top.a_M);
  t.beta = abs(base.a_M * top.a_M1);
  t.T = LaurentPoly::monomial(t.alpha, 0) + LaurentPoly::monomial(t.beta, 1);
  return t;
}

std::vector<BigInt> j0_prefix(CableCache& cache, int k) {
  std::vector<BigInt> out;
  for (int i = 1; i <= k; ++i) {
    const DeltaFraction g = unreduced(cache, i + 1);
    out.push_back(g.coeff_descending(h_n(cache.diagram(), i + 1) - 4 * (i - 1)));
  }
  return out;
}

AdequacyReport adequacy_report(const LinkDiagram& d, const ReportConfig& cfg) {
  if (d.is_empty()) throw std::invalid_argument("adequacy report of the empty diagram");
  if (cfg.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  CableCache cache(d, cfg.engine, cfg.bracket);
  AdequacyReport r;
  r.pd = serialize_pd(d);
  r.crossings = d.crossing_count();
  r.positive = d.positive_crossings();
  r.negative = d.negative_crossings();
  r.writhe = writhe(d);
  r.components = d.component_count();
  r.v_a = v_a(d);
  r.v_b = v_b(d);
  r.a_adequate = is_A_adequate(d);
  r.b_adequate = is_B_adequate(d);
  r.complexity = complexity(d);
  r.ceilings = degree_ceilings(d);
  r.bracket = cache.normalized(1);
  r.bracket_max = r.bracket.max_degree();
  r.bracket_min = r.bracket.min_degree();
  r.ceiling_ok = r.bracket_max <= r.ceilings.M && r.bracket_min >= r.ceilings.m;
  if (!r.ceiling_ok) r.failures.push_back("bracket-degree-ceiling");

  for (int n = 1; n <= cfg.n_max; ++n) {
    const DeltaFraction g = unreduced(cache, n);
    r.h[n] = h_n(d, n);
    r.h_star[n] = h_star_n(d, n);
    r.d_actual[n] = g.max_degree();
    r.d_star[n] = g.min_degree();
    r.d_le_h[n] = r.d_actual[n] <= r.h[n] && r.d_star[n] >= r.h_star[n];
    if (!r.d_le_h[n]) r.failures.push_back("colored-degree-bound n=" + std::to_string(n));
    r.G.emplace(n, g);
  }

  r.lemmas = lemma_checks(cache, cfg.n_max);
  for (const auto& ex : r.lemmas.extremes) {
    if (!ex.stride_ok) r.failures.push_back("coefficient-stride n=" + std::to_string(ex.n));
    if (r.a_adequate && abs(ex.a_M) != 1) r.failures.push_back("adequate-top-coefficient n=" + std::to_string(ex.n));
  }
  if (r.lemmas.vanishing == Verdict::fail) r.failures.push_back("top-coefficient-vanishing");
  if (r.lemmas.second_vanishing == Verdict::fail) r.failures.push_back("second-coefficient-vanishing");
  if (!r.a_adequate && cfg.n_max >= 3 && r.lemmas.extremes.front().a_M == 0) {
    r.notes.push_back("a_M(D) = 0: a_{M-1}(D^n) is reported without a verdict");
  }

  for (int n = 2; n <= cfg.n_max; ++n) {
    TheoremCheck t = theorem_check(cache, n);
    if (!t.agrees) r.failures.push_back("degree-characterization n=" + std::to_string(n));
    if (!t.b_agrees) r.failures.push_back("degree-characterization-mirror n=" + std::to_string(n));
    if (t.a_adequate && abs(t.coeff_at_h) != 1) {
      r.failures.push_back("leading-coefficient-unit n=" + std::to_string(n));
    }
    const auto& ex = r.lemmas.extremes[static_cast<std::size_t>(n - 1)];
    if (abs(t.coeff_at_h) != abs(ex.a_M)) {
      r.failures.push_back("top-coefficient-identification n=" + std::to_string(n));
    }
    r.theorem.push_back(std::move(t));
  }

  for (int n = 3; n <= cfg.n_max; ++n) {
    TInvariant t = t_invariant(cache, n);
    if (!r.a_adequate && !t.T.is_zero()) r.failures.push_back("T-vanishing n=" + std::to_string(n));
    if (r.a_adequate && t.alpha != 1) r.failures.push_back("alpha-unit n=" + std::to_string(n));
    if (t.T == LaurentPoly(1)) {
      r.notes.push_back("T = 1 at n=" + std::to_string(n) +
                        ": for a complexity-minimizing diagram this indicates a fibered knot (not verified)");
    }
    r.t.push_back(std::move(t));
  }
  if (r.t.size() >= 2) {
    bool stable = true;
    for (const auto& t : r.t) stable = stable && t.alpha == r.t.front().alpha && t.beta == r.t.front().beta;
    if (r.a_adequate && !stable) r.failures.push_back("T-stability");
  }
  if (!r.t.empty()) {
    r.notes.push_back("T is computed for this diagram; it is a link invariant only for complexity-minimizing diagrams");
  }

  if (cfg.series > 0) {
    r.beta_series = j0_prefix(cache, cfg.series);
    const BigInt& b1 = r.beta_series.front();
    if (r.a_adequate ? abs(b1) != 1 : b1 != 0) r.failures.push_back("beta1");
  }
  return r;
}

}  // namespace jonesdeg
