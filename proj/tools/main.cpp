// jonesdeg: bracket, colored Jones and adequacy invariants of PD diagrams.
//
// Exit status: 0 success, 1 a checked invariant failed, 2 bad input or
// flags, 3 a computation hit a resource bound.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "common.hpp"
#include "jonesdeg/adequacy.hpp"
#include "jonesdeg/corpus.hpp"
#include "jonesdeg/error.hpp"
#include "jonesdeg/jones.hpp"

namespace jonesdeg::cli {

BracketOptions Globals::bracket_options() const {
  BracketOptions opt;
  opt.cap = cap;
  opt.workers = workers;
  opt.sweep_cell_budget = sweep_budget;
  return opt;
}

Json poly_json(const LaurentPoly& p, const std::string& var) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(Json::array({it->first, to_decimal(it->second)}));
  }
  return Json{{"variable", var}, {"terms", terms}, {"text", p.to_string(var)}};
}

Json fraction_json(const DeltaFraction& f) {
  Json j{{"numerator", poly_json(f.numerator())},
         {"denominator", "A^2 + A^-2"},
         {"max_degree", f.max_degree()},
         {"min_degree", f.min_degree()}};
  j["laurent"] = f.is_laurent() ? poly_json(f.to_laurent()) : Json(nullptr);
  return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

namespace {

LinkDiagram load_nonempty(const std::string& path, const char* what) {
  LinkDiagram d = load_diagram(path);
  if (d.is_empty()) throw ParseError(std::string("the empty diagram has no ") + what);
  return d;
}

Json diagram_json(const LinkDiagram& d) {
  return Json{{"pd", serialize_pd(d)},
              {"crossings", d.crossing_count()},
              {"writhe", writhe(d)},
              {"components", d.component_count()}};
}

std::string diagram_line(const LinkDiagram& d) {
  std::ostringstream out;
  out << serialize_pd(d) << "  (" << d.crossing_count() << (d.crossing_count() == 1 ? " crossing" : " crossings")
      << ", writhe " << writhe(d) << ", "
      << d.component_count() << (d.component_count() == 1 ? " component)" : " components)");
  return out.str();
}

int cmd_bracket(const Globals& g, const std::string& path, bool selftest) {
  const LinkDiagram d = load_nonempty(path, "normalized bracket");
  const BracketOptions opt = g.bracket_options();
  Json j{{"command", "bracket"}, {"diagram", diagram_json(d)}};
  if (!selftest) {
    const LaurentPoly b = bracket(d, g.engine_kind(), opt);
    j["engine"] = g.engine;
    j["bracket"] = poly_json(b);
    if (g.json) {
      print_json(j);
    } else {
      std::cout << "diagram   " << diagram_line(d) << "\n"
                << "engine    " << g.engine << "\n"
                << "bracket   " << b.to_string() << "\n";
    }
    return EXIT_SUCCESS;
  }
  const Engine engines[] = {Engine::statesum, Engine::subgraph, Engine::fast};
  std::vector<StateTally> tallies;
  Json per_engine = Json::object();
  for (Engine e : engines) {
    tallies.push_back(tally(d, e, opt));
    per_engine[std::string(engine_name(e))] = poly_json(tallies.back().bracket());
  }
  const bool agree = tallies[0] == tallies[1] && tallies[1] == tallies[2];
  j["selftest"] = per_engine;
  j["agree"] = agree;
  j["bracket"] = poly_json(tallies.back().bracket());
  if (g.json) {
    print_json(j);
  } else {
    std::cout << "diagram   " << diagram_line(d) << "\n";
    for (std::size_t i = 0; i < tallies.size(); ++i) {
      std::cout << std::left << std::setw(10) << engine_name(engines[i]) << tallies[i].bracket().to_string() << "\n";
    }
    std::cout << (agree ? "engines agree: " : "engines DISAGREE: ") << tallies.back().bracket().to_string() << "\n";
  }
  if (!agree) std::cerr << "jonesdeg: check failed: engine-equivalence\n";
  return agree ? EXIT_SUCCESS : EXIT_FAILURE;
}

int cmd_cjones(const Globals& g, const std::string& path, int n, bool unreduced_only) {
  const LinkDiagram d = load_nonempty(path, "colored Jones polynomial");
  CableCache cache(d, g.engine_kind(), g.bracket_options());
  const std::string color = std::to_string(n + 1);
  Json j{{"command", "cjones"}, {"diagram", diagram_json(d)}, {"n", n}};
  const DeltaFraction G = unreduced(cache, n);
  j["G"] = fraction_json(G);
  std::ostringstream human;
  human << "diagram   " << diagram_line(d) << "\n";
  human << "G(" << color << ", A) = " << G.to_string() << "\n";
  if (!unreduced_only) {
    const ReducedJones r = reduced(cache, n);
    j["reduced"] = r.in_q ? poly_json(r.q_form, "q") : poly_json(r.a_form, "A");
    j["reduced_in_q"] = r.in_q;
    if (r.in_q) {
      human << "J(" << color << ", q) = " << r.q_form.to_string("q") << "\n";
    } else {
      human << "J(" << color << ", A) = " << r.a_form.to_string() << "  (exponents not all divisible by 4)\n";
    }
  }
  if (g.json) {
    print_json(j);
  } else {
    std::cout << human.str();
  }
  return EXIT_SUCCESS;
}

Json report_json(const AdequacyReport& r) {
  Json j{{"pd", r.pd},
         {"crossings", r.crossings},
         {"positive", r.positive},
         {"negative", r.negative},
         {"writhe", r.writhe},
         {"components", r.components},
         {"v_a", r.v_a},
         {"v_b", r.v_b},
         {"a_adequate", r.a_adequate},
         {"b_adequate", r.b_adequate},
         {"complexity", Json::array({r.complexity.negative_crossings, r.complexity.crossings,
                                     r.complexity.va_minus_writhe})},
         {"M", r.ceilings.M},
         {"m", r.ceilings.m},
         {"bracket", poly_json(r.bracket)},
         {"bracket_max", r.bracket_max},
         {"bracket_min", r.bracket_min},
         {"ceiling_ok", r.ceiling_ok},
         {"notes", r.notes},
         {"failures", r.failures}};
  Json colors = Json::array();
  for (const auto& [n, g] : r.G) {
    colors.push_back(Json{{"n", n},
                          {"h", r.h.at(n)},
                          {"h_star", r.h_star.at(n)},
                          {"d", r.d_actual.at(n)},
                          {"d_star", r.d_star.at(n)},
                          {"bound_ok", r.d_le_h.at(n)},
                          {"G", fraction_json(g)}});
  }
  j["colors"] = colors;
  Json theorem = Json::array();
  for (const auto& t : r.theorem) {
    theorem.push_back(Json{{"n", t.n},
                           {"h", t.h},
                           {"d", t.d},
                           {"coeff_at_h", to_decimal(t.coeff_at_h)},
                           {"degree_equal", t.degree_equal},
                           {"agrees", t.agrees},
                           {"h_star", t.h_star},
                           {"d_star", t.d_star},
                           {"b_side_equal", t.b_side_equal},
                           {"b_agrees", t.b_agrees}});
  }
  j["degree_checks"] = theorem;
  Json extremes = Json::array();
  for (const auto& ex : r.lemmas.extremes) {
    extremes.push_back(Json{{"n", ex.n},
                            {"M", ex.M},
                            {"a_M", to_decimal(ex.a_M)},
                            {"a_M1", to_decimal(ex.a_M1)},
                            {"stride_ok", ex.stride_ok}});
  }
  j["cable_extremes"] = extremes;
  j["top_vanishing"] = verdict_name(r.lemmas.vanishing);
  j["second_vanishing"] = verdict_name(r.lemmas.second_vanishing);
  Json t_inv = Json::array();
  for (const auto& t : r.t) {
    t_inv.push_back(Json{{"n", t.n}, {"alpha", to_decimal(t.alpha)}, {"beta", to_decimal(t.beta)},
                         {"T", poly_json(t.T, "q")}});
  }
  j["T"] = t_inv;
  Json beta = Json::array();
  for (const auto& b : r.beta_series) beta.push_back(to_decimal(b));
  j["beta_series"] = beta;
  return j;
}

void print_report(const AdequacyReport& r) {
  std::cout << "diagram      " << r.pd << "\n"
            << "crossings    " << r.crossings << " (" << r.positive << " positive, " << r.negative
            << " negative), writhe " << r.writhe << ", " << r.components << " component(s)\n"
            << "v_A, v_B     " << r.v_a << ", " << r.v_b << "\n"
            << "A-adequate   " << yes_no(r.a_adequate) << "\n"
            << "B-adequate   " << yes_no(r.b_adequate) << "\n"
            << "complexity   (c_-, c, v_A - w) = (" << r.complexity.negative_crossings << ", "
            << r.complexity.crossings << ", " << r.complexity.va_minus_writhe << ")\n"
            << "bracket      " << r.bracket.to_string() << "\n"
            << "ceilings     M = " << r.ceilings.M << ", m = " << r.ceilings.m << "; degrees " << r.bracket_max
            << " .. " << r.bracket_min << (r.ceiling_ok ? "  ok" : "  VIOLATED") << "\n\n";

  std::cout << std::right << std::setw(3) << "n" << std::setw(7) << "h_n" << std::setw(7) << "d(n)" << std::setw(7)
            << "h*_n" << std::setw(7) << "d*(n)" << std::setw(10) << "a_M" << std::setw(10) << "a_M-1" << "\n";
  for (const auto& [n, g] : r.G) {
    std::cout << std::setw(3) << n << std::setw(7) << r.h.at(n) << std::setw(7) << r.d_actual.at(n) << std::setw(7)
              << r.h_star.at(n) << std::setw(7) << r.d_star.at(n);
    const auto& ex = r.lemmas.extremes[static_cast<std::size_t>(n - 1)];
    std::cout << std::setw(10) << to_decimal(ex.a_M) << std::setw(10) << to_decimal(ex.a_M1) << "\n";
  }
  std::cout << "\n";
  for (const auto& t : r.theorem) {
    std::cout << "degree n=" << t.n << "   d = h " << yes_no(t.degree_equal) << ", coefficient at h "
              << to_decimal(t.coeff_at_h) << (t.agrees ? ", matches adequacy" : ", CONTRADICTS adequacy")
              << "; mirror side " << (t.b_agrees ? "matches" : "CONTRADICTS") << "\n";
  }
  std::cout << "top coefficients of cables vanish iff not A-adequate: " << verdict_name(r.lemmas.vanishing) << "\n"
            << "second coefficient of cables vanishes: " << verdict_name(r.lemmas.second_vanishing) << "\n";
  for (const auto& t : r.t) {
    std::cout << "T n=" << t.n << "      alpha = " << to_decimal(t.alpha) << ", beta = " << to_decimal(t.beta)
              << ", T = " << t.T.to_string("q") << "\n";
  }
  if (!r.beta_series.empty()) {
    std::cout << "beta series ";
    for (std::size_t i = 0; i < r.beta_series.size(); ++i) std::cout << (i ? ", " : " ") << to_decimal(r.beta_series[i]);
    std::cout << "\n";
  }
  for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
  if (r.failures.empty()) {
    std::cout << "failures     none\n";
  } else {
    std::cout << "failures    ";
    for (const auto& f : r.failures) std::cout << " " << f;
    std::cout << "\n";
  }
}

int cmd_adequacy(const Globals& g, const std::string& path, int n_max, int series) {
  const LinkDiagram d = load_nonempty(path, "adequacy report");
  ReportConfig cfg;
  cfg.n_max = n_max;
  cfg.series = series;
  cfg.engine = g.engine_kind();
  cfg.bracket = g.bracket_options();
  const AdequacyReport r = adequacy_report(d, cfg);
  if (g.json) {
    Json j = report_json(r);
    j["command"] = "adequacy";
    j["n_max"] = n_max;
    j["series"] = series;
    print_json(j);
  } else {
    print_report(r);
  }
  for (const auto& f : r.failures) std::cerr << "jonesdeg: check failed: " << f << "\n";
  return r.failures.empty() ? EXIT_SUCCESS : EXIT_FAILURE;
}

int cmd_cable(const Globals& g, const std::string& path, int n) {
  const LinkDiagram d = load_diagram(path);
  const LinkDiagram c = cable(d, n);
  if (g.json) {
    Json j = diagram_json(c);
    j["command"] = "cable";
    j["n"] = n;
    print_json(j);
  } else {
    std::cout << serialize_pd(c) << "\n";
  }
  return EXIT_SUCCESS;
}

}  // namespace
}  // namespace jonesdeg::cli

int main(int argc, char** argv) {
  using namespace jonesdeg;
  using namespace jonesdeg::cli;

  CLI::App app{"Kauffman bracket, colored Jones and adequacy invariants of link diagrams", "jonesdeg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--cap", g.cap, "largest crossing count for the exhaustive engines")->check(CLI::PositiveNumber);
  app.add_option("--engine", g.engine, "bracket engine")->check(CLI::IsMember({"statesum", "subgraph", "fast"}));
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--json", g.json, "emit JSON instead of the human report");
  app.add_option("--sweep-budget", g.sweep_budget, "cell budget of the sweep engine")->check(CLI::PositiveNumber);

  std::string path;
  int n = 1;
  int n_max = 2;
  int series = 0;
  bool selftest = false;
  bool unreduced_only = false;

  auto* c_bracket = app.add_subcommand("bracket", "normalized Kauffman bracket");
  c_bracket->add_flag("--selftest", selftest, "run all three engines and compare");
  c_bracket->add_option("file", path, "PD file")->required();

  auto* c_cjones = app.add_subcommand("cjones", "colored Jones polynomial J(n+1)");
  c_cjones->add_option("--n", n, "cable index n >= 1")->required()->check(CLI::PositiveNumber);
  c_cjones->add_flag("--unreduced", unreduced_only, "only the unreduced G(n+1, A)");
  c_cjones->add_option("file", path, "PD file")->required();

  auto* c_adequacy = app.add_subcommand("adequacy", "adequacy and degree report");
  c_adequacy->add_option("--nmax", n_max, "largest n for G(n+1, A)")->check(CLI::Range(1, 16));
  c_adequacy->add_option("--series", series, "number of beta coefficients")->check(CLI::Range(0, 15));
  c_adequacy->add_option("file", path, "PD file")->required();

  auto* c_cable = app.add_subcommand("cable", "blackboard n-cable as PD");
  c_cable->add_option("--n", n, "number of parallel copies")->required()->check(CLI::NonNegativeNumber);
  c_cable->add_option("file", path, "PD file")->required();

  auto* c_verify = app.add_subcommand("verify", "run every check over a corpus file");
  c_verify->add_option("--nmax", n_max, "largest n for colored checks")->check(CLI::Range(1, 16));
  c_verify->add_option("corpus", path, "corpus file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_bracket) return cmd_bracket(g, path, selftest);
    if (*c_cjones) return cmd_cjones(g, path, n, unreduced_only);
    if (*c_adequacy) return cmd_adequacy(g, path, n_max, series);
    if (*c_cable) return cmd_cable(g, path, n);
    if (*c_verify) return cmd_verify(g, VerifyConfig{path, n_max});
  } catch (const ParseError& e) {
    std::cerr << "jonesdeg: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "jonesdeg: input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "jonesdeg: resource limit: " << e.what();
    if (!e.progress().empty()) std::cerr << " (" << e.progress() << ")";
    std::cerr << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "jonesdeg: invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const NotDivisible& e) {
    std::cerr << "jonesdeg: invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "jonesdeg: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
