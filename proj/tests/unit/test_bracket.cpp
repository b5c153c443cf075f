#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "jonesdeg/bracket.hpp"
#include "jonesdeg/corpus.hpp"
#include "jonesdeg/error.hpp"
#include "oracle.hpp"

using namespace jonesdeg;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = load_corpus(JONESDEG_CORPUS);
  return c;
}

oracle::Poly to_oracle(const LaurentPoly& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = c.get_si();
  return out;
}

}  // namespace

TEST(Engines, NamesRoundTrip) {
  for (Engine e : {Engine::statesum, Engine::subgraph, Engine::fast}) EXPECT_EQ(parse_engine(engine_name(e)), e);
  EXPECT_THROW(parse_engine("quantum"), ParseError);
}

TEST(Bracket, HandValues) {
  EXPECT_EQ(bracket_statesum(parse_pd("X[1,1,2,2]")).to_string(), "-A^3");
  EXPECT_EQ(bracket_statesum(parse_pd("X[2,1,1,2]")).to_string(), "-A^-3");
  EXPECT_EQ(bracket(LinkDiagram::unknot()), LaurentPoly(1));
  EXPECT_EQ(bracket(LinkDiagram::unlink(3)), jonesdeg::delta_power(2));
  EXPECT_THROW(bracket(LinkDiagram()), std::invalid_argument);
  EXPECT_EQ(bracket_unnormalized(LinkDiagram()), LaurentPoly(1));
  EXPECT_EQ(bracket_unnormalized(LinkDiagram::unknot()), LaurentPoly::delta());
}

TEST(Bracket, LeftTrefoil) {
  const LinkDiagram d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  EXPECT_EQ(bracket_fast(d).to_string(), "A^7 - A^3 - A^-5");
}

TEST(Bracket, EnginesMatchOracleOnCorpus) {
  for (const auto& e : corpus()) {
    const LinkDiagram& d = e.diagram;
    if (d.crossing_count() == 0) continue;
    const oracle::Poly expected = oracle::bracket(oracle::decode(e.pd));
    for (Engine eng : {Engine::statesum, Engine::subgraph, Engine::fast}) {
      EXPECT_EQ(to_oracle(bracket(d, eng)), expected) << e.name << " " << engine_name(eng);
    }
    EXPECT_EQ(bracket_unnormalized(d), bracket(d) * LaurentPoly::delta()) << e.name;
  }
}

TEST(Bracket, TalliesAgreeAcrossEngines) {
  for (const auto& e : corpus()) {
    const LinkDiagram& d = e.diagram;
    if (d.crossing_count() == 0) continue;
    for (int n : {1, 2}) {
      const LinkDiagram c = cable(d, n);
      if (c.crossing_count() > 20) continue;
      const StateTally t = tally_statesum(c);
      EXPECT_EQ(t.total(), 1ULL << c.crossing_count());
      EXPECT_EQ(tally_subgraph(c), t) << e.name << " n=" << n;
      EXPECT_EQ(tally_fast(c), t) << e.name << " n=" << n;
      BracketOptions scratch;
      scratch.incremental = false;
      EXPECT_EQ(tally_subgraph(c, scratch), t) << e.name << " n=" << n;
    }
  }
}

TEST(Bracket, WorkersDoNotChangeTheResult) {
  const LinkDiagram d = cable(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"), 2);
  const StateTally serial = tally_statesum(d);
  for (unsigned w : {2u, 3u, 7u}) {
    BracketOptions opt;
    opt.workers = w;
    EXPECT_EQ(tally_statesum(d, opt), serial) << w;
    EXPECT_EQ(tally_subgraph(d, opt), serial) << w;
  }
}

TEST(Bracket, CapIsEnforced) {
  BracketOptions opt;
  opt.cap = 3;
  const LinkDiagram d = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
  EXPECT_THROW(tally_statesum(d, opt), ResourceLimit);
  EXPECT_THROW(tally_subgraph(d, opt), ResourceLimit);
  EXPECT_NO_THROW(tally_fast(d, opt));
}

TEST(Bracket, SweepBudgetIsEnforced) {
  BracketOptions opt;
  opt.sweep_cell_budget = 50;
  const LinkDiagram d = cable(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"), 3);
  try {
    (void)tally_fast(d, opt);
    FAIL() << "expected ResourceLimit";
  } catch (const ResourceLimit& e) {
    EXPECT_FALSE(e.progress().empty());
  }
}

TEST(Bracket, FastEngineHandlesLargeCables) {
  const LinkDiagram d = cable(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"), 4);
  ASSERT_EQ(d.crossing_count(), 48);
  const StateTally t = tally_fast(d);
  EXPECT_EQ(t.total(), 1ULL << 48);
}

TEST(Bracket, MirrorInvertsVariable) {
  for (const auto& e : corpus()) {
    if (e.diagram.crossing_count() == 0) continue;
    EXPECT_EQ(bracket(mirror(e.diagram)), bracket(e.diagram).inverted()) << e.name;
  }
}

TEST(Bracket, KinkMultipliesByMinusACubed) {
  for (const auto& e : corpus()) {
    if (e.diagram.is_empty()) continue;
    const LaurentPoly b = bracket(e.diagram);
    EXPECT_EQ(bracket(add_kink(e.diagram, 1, 1)), b * LaurentPoly::monomial(-1, 3)) << e.name;
    EXPECT_EQ(bracket(add_kink(e.diagram, 1, -1)), b * LaurentPoly::monomial(-1, -3)) << e.name;
  }
}

TEST(BracketProperty, RandomClosuresAgreeWithOracle) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> strands(2, 4);
    const int s = strands(rng);
    std::uniform_int_distribution<int> len(s - 1, 11);
    const LinkDiagram d = gen::random_closure(rng, s, len(rng));
    const std::string pd = serialize_pd(d);
    const oracle::Poly expected = oracle::bracket(oracle::decode(pd));
    EXPECT_EQ(to_oracle(bracket_statesum(d)), expected) << pd;
    EXPECT_EQ(to_oracle(bracket_subgraph(d)), expected) << pd;
    EXPECT_EQ(to_oracle(bracket_fast(d)), expected) << pd;
  }
}

TEST(BracketProperty, ExponentsShareResidueOfCeiling) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    const LinkDiagram d = gen::random_closure(rng, 3, 9);
    const LaurentPoly b = bracket(d);
    const int top = b.max_degree();
    const ExtremeCoeffs ex = extreme_coeffs(b, top, 3);
    EXPECT_TRUE(ex.stride_ok) << serialize_pd(d);
    EXPECT_EQ(ex.coeffs[0], b.leading());
    for (const auto& [e, c] : b.terms()) EXPECT_EQ(((top - e) % 4 + 4) % 4, 0);
  }
}

TEST(Tally, BracketFromCounts) {
  StateTally t(1, 2);
  t.add(1, 2, 1);  // A: two circles
  t.add(0, 1, 1);  // B: one circle
  EXPECT_EQ(t.bracket().to_string(), "-A^3");
  EXPECT_EQ(t.get(1, 2), 1u);
  EXPECT_EQ(t.total(), 2u);
  StateTally u = t;
  u += t;
  EXPECT_EQ(u.total(), 4u);
}
