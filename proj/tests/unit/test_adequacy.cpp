#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "jonesdeg/adequacy.hpp"
#include "jonesdeg/corpus.hpp"
#include "jonesdeg/states.hpp"

using namespace jonesdeg;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = load_corpus(JONESDEG_CORPUS);
  return c;
}

const CorpusEntry& entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no corpus entry " + name);
}

}  // namespace

TEST(Adequacy, CorpusLabels) {
  for (const auto& e : corpus()) {
    if (e.diagram.is_empty()) continue;
    if (e.a_adequate) {
      EXPECT_EQ(is_A_adequate(e.diagram), *e.a_adequate) << e.name;
    }
    if (e.b_adequate) {
      EXPECT_EQ(is_B_adequate(e.diagram), *e.b_adequate) << e.name;
    }
  }
}

TEST(Adequacy, MirrorSwapsSides) {
  for (const auto& e : corpus()) {
    const LinkDiagram m = mirror(e.diagram);
    EXPECT_EQ(is_B_adequate(e.diagram), is_A_adequate(m)) << e.name;
    EXPECT_EQ(v_a(e.diagram), v_b(m)) << e.name;
  }
}

TEST(Adequacy, TrefoilNumbers) {
  const LinkDiagram& d = entry("trefoil_left").diagram;
  EXPECT_EQ(v_a(d), 3);
  EXPECT_EQ(v_b(d), 2);
  EXPECT_EQ(h_n(d, 1), 16);
  EXPECT_EQ(h_n(d, 2), 46);
  const DegreeCeilings dc = degree_ceilings(d);
  EXPECT_EQ(dc.M, 7);
  EXPECT_EQ(dc.m, -5);
  const Complexity cx = complexity(d);
  EXPECT_EQ(cx.negative_crossings, 3);
  EXPECT_EQ(cx.crossings, 3);
  EXPECT_EQ(cx.va_minus_writhe, 6);
}

TEST(Adequacy, CeilingsBoundTheBracket) {
  for (const auto& e : corpus()) {
    if (e.diagram.is_empty()) continue;
    const LaurentPoly b = bracket(e.diagram);
    const DegreeCeilings dc = degree_ceilings(e.diagram);
    EXPECT_LE(b.max_degree(), dc.M) << e.name;
    EXPECT_GE(b.min_degree(), dc.m) << e.name;
    if (is_A_adequate(e.diagram)) {
      EXPECT_EQ(b.max_degree(), dc.M) << e.name;
      EXPECT_EQ(abs(b.leading()), 1) << e.name;
    }
    if (is_B_adequate(e.diagram)) {
      EXPECT_EQ(b.min_degree(), dc.m) << e.name;
    }
  }
}

TEST(Adequacy, ColoredDegreeCharacterization) {
  for (const auto& e : corpus()) {
    if (e.diagram.is_empty()) continue;
    CableCache cache(e.diagram);
    const int n_max = e.diagram.crossing_count() <= 3 ? 3 : 2;
    bool eq2 = false;
    for (int n = 1; n <= n_max; ++n) {
      const TheoremCheck t = theorem_check(cache, n);
      EXPECT_LE(t.d, t.h) << e.name << " n=" << n;
      EXPECT_GE(t.d_star, t.h_star) << e.name << " n=" << n;
      if (n >= 2) {
        EXPECT_TRUE(t.agrees) << e.name << " n=" << n;
        EXPECT_TRUE(t.b_agrees) << e.name << " n=" << n;
        if (t.a_adequate) {
          EXPECT_EQ(abs(t.coeff_at_h), 1) << e.name;
        }
      }
      if (n == 2) eq2 = t.degree_equal;
      if (n == 3) {
        EXPECT_EQ(t.degree_equal, eq2) << e.name;
      }
    }
  }
}

TEST(Adequacy, TopCoefficientOfCables) {
  for (const auto& e : corpus()) {
    if (e.diagram.is_empty()) continue;
    CableCache cache(e.diagram);
    const LemmaChecks l = lemma_checks(cache, 3);
    EXPECT_EQ(l.vanishing, Verdict::pass) << e.name;
    EXPECT_NE(l.second_vanishing, Verdict::fail) << e.name;
    for (const auto& ex : l.extremes) {
      EXPECT_TRUE(ex.stride_ok) << e.name;
      if (ex.n >= 2 && !is_A_adequate(e.diagram)) {
        EXPECT_EQ(ex.a_M, 0) << e.name << " n=" << ex.n;
      }
      if (is_A_adequate(e.diagram)) {
        EXPECT_EQ(abs(ex.a_M), 1) << e.name << " n=" << ex.n;
      }
    }
  }
}

TEST(Adequacy, SecondCoefficientOnInterleavedExample) {
  CableCache cache(entry("r2_unlink").diagram);
  ASSERT_FALSE(is_A_adequate(cache.diagram()));
  const LemmaChecks l = lemma_checks(cache, 3);
  EXPECT_EQ(l.extremes[0].a_M, -1);
  EXPECT_EQ(l.extremes[2].a_M, 0);
  EXPECT_EQ(l.extremes[2].a_M1, 0);
  EXPECT_EQ(l.second_vanishing, Verdict::pass);
}

TEST(Adequacy, SecondCoefficientVerdictNeedsNonzeroTop) {
  CableCache cache(entry("kink_neg").diagram);
  const LemmaChecks l = lemma_checks(cache, 3);
  EXPECT_EQ(l.extremes[0].a_M, 0);
  EXPECT_EQ(l.second_vanishing, Verdict::not_applicable);
}

TEST(Adequacy, TInvariant) {
  for (const auto& e : corpus()) {
    if (e.diagram.is_empty()) continue;
    CableCache cache(e.diagram);
    const TInvariant t = t_invariant(cache, 3);
    if (is_A_adequate(e.diagram)) {
      EXPECT_EQ(t.alpha, 1) << e.name;
    } else {
      EXPECT_TRUE(t.T.is_zero()) << e.name;
    }
  }
  CableCache cache(entry("trefoil_left").diagram);
  EXPECT_THROW(t_invariant(cache, 2), std::invalid_argument);
}

TEST(Adequacy, FirstSeriesCoefficient) {
  for (const auto& e : corpus()) {
    if (e.diagram.is_empty()) continue;
    CableCache cache(e.diagram);
    const auto beta = j0_prefix(cache, 2);
    ASSERT_EQ(beta.size(), 2u);
    if (is_A_adequate(e.diagram)) {
      EXPECT_EQ(abs(beta[0]), 1) << e.name;
    } else {
      EXPECT_EQ(beta[0], 0) << e.name;
    }
  }
}

TEST(Report, CorpusPassesWithoutFailures) {
  for (const auto& e : corpus()) {
    if (e.diagram.is_empty()) continue;
    ReportConfig cfg;
    cfg.n_max = 3;
    cfg.series = 2;
    const AdequacyReport r = adequacy_report(e.diagram, cfg);
    EXPECT_TRUE(r.failures.empty()) << e.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.crossings, e.diagram.crossing_count());
    EXPECT_EQ(r.theorem.size(), 2u);
    EXPECT_EQ(r.t.size(), 1u);
    EXPECT_EQ(r.G.size(), 3u);
  }
  EXPECT_THROW(adequacy_report(LinkDiagram(), {}), std::invalid_argument);
}

TEST(AdequacyProperty, RandomClosures) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    const LinkDiagram d = gen::random_closure(rng, 3, 6);
    ReportConfig cfg;
    cfg.n_max = 3;
    const AdequacyReport r = adequacy_report(d, cfg);
    EXPECT_TRUE(r.failures.empty()) << serialize_pd(d) << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(is_B_adequate(d), is_A_adequate(mirror(d)));
    EXPECT_EQ(bracket(mirror(d)), bracket(d).inverted());
  }
}

TEST(AdequacyProperty, AlternatingBraidsAreAdequate) {
  // sigma_1^k closures with k >= 2 are reduced alternating diagrams.
  for (int k = 2; k <= 7; ++k) {
    const LinkDiagram d = gen::braid_closure(gen::BraidWord(static_cast<std::size_t>(k), 1), 2);
    EXPECT_TRUE(is_A_adequate(d)) << k;
    EXPECT_TRUE(is_B_adequate(d)) << k;
  }
}
