#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "jonesdeg/corpus.hpp"
#include "jonesdeg/error.hpp"
#include "jonesdeg/states.hpp"
#include "oracle.hpp"

using namespace jonesdeg;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = load_corpus(JONESDEG_CORPUS);
  return c;
}

std::vector<LinkDiagram> small_sample() {
  std::vector<LinkDiagram> out;
  for (const auto& e : corpus()) {
    if (e.diagram.crossing_count() > 0) out.push_back(e.diagram);
  }
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) out.push_back(gen::random_closure(rng, 3, 7));
  return out;
}

}  // namespace

TEST(States, MaskConstruction) {
  const KauffmanState s = KauffmanState::from_b_mask(4, 0b0101);
  EXPECT_EQ(s.at(0), Smoothing::B);
  EXPECT_EQ(s.at(1), Smoothing::A);
  EXPECT_EQ(s.a_count(), 2);
  EXPECT_EQ(s.b_count(), 2);
}

TEST(States, SmoothingTables) {
  for (int slot = 0; slot < 4; ++slot) {
    for (Smoothing s : {Smoothing::A, Smoothing::B}) {
      const int p = smoothing_partner(s, slot);
      EXPECT_EQ(smoothing_partner(s, p), slot);
      EXPECT_EQ(smoothing_side(s, p), smoothing_side(s, slot));
    }
  }
  EXPECT_EQ(smoothing_side(Smoothing::A, 0), 0);
  EXPECT_EQ(smoothing_side(Smoothing::B, 0), 0);
}

TEST(States, KinkCircles) {
  const LinkDiagram k = parse_pd("X[1,1,2,2]");
  EXPECT_EQ(count_circles(k, KauffmanState::all(1, Smoothing::A)), 2);
  EXPECT_EQ(count_circles(k, KauffmanState::all(1, Smoothing::B)), 1);
}

TEST(States, CirclesMatchOracleOnEveryState) {
  for (const auto& e : corpus()) {
    const LinkDiagram& d = e.diagram;
    const int c = d.crossing_count();
    if (c == 0 || c > 6) continue;
    const oracle::RawDiagram raw = oracle::decode(e.pd);
    for (std::uint64_t mask = 0; mask < (1ULL << c); ++mask) {
      const KauffmanState s = KauffmanState::from_b_mask(c, mask);
      const int expected = oracle::state_circles(raw, mask);
      EXPECT_EQ(count_circles(d, s), expected) << e.name << " mask " << mask;
      EXPECT_EQ(resolve(d, s).circle_count(), expected) << e.name << " mask " << mask;
    }
  }
}

TEST(States, ResolutionCoversEveryArcOnce) {
  for (const auto& d : small_sample()) {
    const int c = d.crossing_count();
    std::mt19937_64 rng(32);
    for (int t = 0; t < 8; ++t) {
      const KauffmanState s = KauffmanState::from_b_mask(c, rng() & ((1ULL << c) - 1));
      const Resolution r = resolve(d, s);
      std::vector<int> seen(static_cast<std::size_t>(d.arc_count()), 0);
      std::size_t passes = 0;
      for (const auto& circle : r.circles) {
        for (int a : circle.arcs) ++seen[static_cast<std::size_t>(a - 1)];
        passes += circle.passes.size();
      }
      for (int k : seen) EXPECT_EQ(k, 1);
      EXPECT_EQ(passes, static_cast<std::size_t>(2 * c));
      EXPECT_EQ(nesting_parity(d, s, r).size(), r.circles.size());
    }
  }
}

TEST(Ribbon, KinkGraphs) {
  const LinkDiagram k = parse_pd("X[1,1,2,2]");
  const RibbonGraph ga = ribbon_graph_a(k);
  EXPECT_EQ(ga.vertex_count(), 2);
  EXPECT_EQ(ga.edge_count(), 1);
  EXPECT_FALSE(has_one_edge_loop(ga));
  const RibbonGraph gb = ribbon_graph_b(k);
  EXPECT_EQ(gb.vertex_count(), 1);
  EXPECT_TRUE(has_one_edge_loop(gb));
  EXPECT_EQ(loop_edges(gb), std::vector<int>{0});
}

TEST(Ribbon, InterleavedLoopsHaveGenusOne) {
  // Rotation x0.0 x1.0 x0.1 x1.1 at a single vertex.
  const RibbonGraph g = RibbonGraph::from_cycles({{0, 2, 1, 3}}, {false});
  const SubgraphStats s = g.stats();
  EXPECT_EQ(s.v, 1);
  EXPECT_EQ(s.e, 2);
  EXPECT_EQ(s.f, 1);
  EXPECT_EQ(s.g, 1);
  const RibbonGraph nested = RibbonGraph::from_cycles({{0, 1, 2, 3}}, {false});
  EXPECT_EQ(nested.stats().g, 0);
  EXPECT_EQ(nested.stats().f, 3);
}

TEST(Ribbon, R2UnlinkAllAGraphIsInterleavedPair) {
  const LinkDiagram d = parse_pd("X[3,2,4,1] X[4,2,3,1]");
  const RibbonGraph g = ribbon_graph_a(d);
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.is_loop(0));
  EXPECT_TRUE(g.is_loop(1));
  EXPECT_EQ(g.stats().g, 1);
}

TEST(Ribbon, EulerRelationAndRotationConsistency) {
  for (const auto& d : small_sample()) {
    for (const RibbonGraph& g : {ribbon_graph_a(d), ribbon_graph_b(d)}) {
      for (int h = 0; h < 2 * g.edge_count(); ++h) {
        const auto& cyc = g.vertex_cycle(g.vertex_of(h));
        EXPECT_EQ(cyc[static_cast<std::size_t>(g.rotation_index(h))], h);
        const int nx = g.rotation_next(h);
        EXPECT_EQ(g.vertex_of(nx), g.vertex_of(h));
      }
      std::mt19937_64 rng(33);
      for (int t = 0; t < 10; ++t) {
        const SpanningSubgraph h = SpanningSubgraph::from_mask(g.edge_count(), rng());
        const SubgraphStats s = subgraph_stats(g, h);
        EXPECT_EQ(s.v - s.e + s.f, 2 * s.k - 2 * s.g);
        EXPECT_GE(s.g, 0);
        EXPECT_EQ(s.f, faces(g, h));
        EXPECT_EQ(s.k, components(g, h));
      }
    }
  }
}

TEST(Ribbon, BoundaryWalksCountDualStateCircles) {
  for (const auto& e : corpus()) {
    const LinkDiagram& d = e.diagram;
    const int c = d.crossing_count();
    if (c == 0 || c > 6) continue;
    const RibbonGraph g = ribbon_graph_a(d);
    for (std::uint64_t mask = 0; mask < (1ULL << c); ++mask) {
      const SpanningSubgraph h = SpanningSubgraph::from_mask(c, mask);
      EXPECT_EQ(faces(g, h), count_circles(d, dual_state(h))) << e.name << " mask " << mask;
    }
  }
}

TEST(Ribbon, DualStateIsBOnChosenEdges) {
  const SpanningSubgraph h = SpanningSubgraph::from_mask(3, 0b110);
  const KauffmanState s = dual_state(h);
  EXPECT_EQ(s.at(0), Smoothing::A);
  EXPECT_EQ(s.at(1), Smoothing::B);
  EXPECT_EQ(s.at(2), Smoothing::B);
}

TEST(Ribbon, LoopSubgraphsOfCablesArePlanar) {
  for (const auto& e : corpus()) {
    if (e.diagram.crossing_count() == 0 || e.diagram.crossing_count() > 5) continue;
    for (int n = 2; n <= 3; ++n) {
      const LinkDiagram c = cable(e.diagram, n);
      const RibbonGraph g = ribbon_graph_a(c);
      const std::vector<int> loops = loop_edges(g);
      ASSERT_LT(loops.size(), 20u);
      for (std::uint64_t m = 0; m < (1ULL << loops.size()); ++m) {
        SpanningSubgraph h = SpanningSubgraph::none(g.edge_count());
        for (std::size_t i = 0; i < loops.size(); ++i) {
          if ((m >> i) & 1) h.edges[static_cast<std::size_t>(loops[i])] = 1;
        }
        EXPECT_EQ(subgraph_stats(g, h).g, 0) << e.name << " n=" << n;
      }
    }
  }
}

TEST(Incremental, TracksFacesThroughRandomToggles) {
  for (const auto& d : small_sample()) {
    const RibbonGraph g = ribbon_graph_a(d);
    IncrementalFaces inc(g);
    SpanningSubgraph h = SpanningSubgraph::none(g.edge_count());
    EXPECT_EQ(inc.faces(), faces(g, h));
    std::mt19937_64 rng(34);
    std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
    for (int t = 0; t < 60; ++t) {
      const int e = pick(rng);
      h.edges[static_cast<std::size_t>(e)] ^= 1;
      EXPECT_EQ(inc.toggle(e), faces(g, h));
      EXPECT_EQ(inc.contains(e), h.has(e));
      EXPECT_EQ(inc.edge_count(), h.edge_count());
    }
  }
}

TEST(Incremental, GrayCodeVisitsEverySubsetCorrectly) {
  const LinkDiagram d = parse_pd("X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]");
  const RibbonGraph g = ribbon_graph_a(d);
  IncrementalFaces inc(g);
  const int e = g.edge_count();
  for (std::uint64_t i = 1; i < (1ULL << e); ++i) {
    const int bit = __builtin_ctzll(i);
    inc.toggle(bit);
    const std::uint64_t gray = i ^ (i >> 1);
    EXPECT_EQ(inc.faces(), faces(g, SpanningSubgraph::from_mask(e, gray)));
  }
}

TEST(Render, DescribeAndDot) {
  const RibbonGraph g = ribbon_graph_a(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
  const std::string text = describe(g);
  EXPECT_NE(text.find("x0."), std::string::npos);
  EXPECT_EQ(text, describe(g));
  const std::string dot = to_dot(g, "trefoil");
  EXPECT_NE(dot.find("trefoil"), std::string::npos);
  EXPECT_NE(dot.find("--"), std::string::npos);
}
