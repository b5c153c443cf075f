#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jonesdeg/diagram.hpp"

namespace jonesdeg {

enum class Smoothing : std::uint8_t { A = 0, B = 1 };

/// A choice of smoothing at every crossing.
class KauffmanState {
 public:
  KauffmanState() = default;
  explicit KauffmanState(std::vector<Smoothing> choice) : choice_(std::move(choice)) {}
  static KauffmanState all(int crossings, Smoothing s) {
    return KauffmanState(std::vector<Smoothing>(static_cast<std::size_t>(crossings), s));
  }
  /// Bit x of `b_mask` set means crossing x is B-smoothed (crossings < 64).
  static KauffmanState from_b_mask(int crossings, std::uint64_t b_mask);

  int size() const noexcept { return static_cast<int>(choice_.size()); }
  Smoothing at(int x) const { return choice_.at(static_cast<std::size_t>(x)); }
  void set(int x, Smoothing s) { choice_.at(static_cast<std::size_t>(x)) = s; }
  int a_count() const noexcept;
  int b_count() const noexcept { return size() - a_count(); }

 private:
  std::vector<Smoothing> choice_;
};

/// Slot paired with `slot` by the smoothing: A joins 0-1 and 2-3,
/// B joins 3-0 and 1-2.
inline int smoothing_partner(Smoothing s, int slot) noexcept {
  static constexpr int a[4] = {1, 0, 3, 2};
  static constexpr int b[4] = {3, 2, 1, 0};
  return s == Smoothing::A ? a[slot] : b[slot];
}

/// Which of the two smoothing arcs of a crossing contains `slot`; arc 0 is
/// the one through slot 0.
inline int smoothing_side(Smoothing s, int slot) noexcept {
  if (s == Smoothing::A) return slot <= 1 ? 0 : 1;
  return (slot == 0 || slot == 3) ? 0 : 1;
}

/// One traversal of a smoothing arc: the circle arrives at `crossing`
/// through `in_slot` and leaves through `out_slot`.
struct StatePass {
  int crossing = 0;
  int side = 0;
  int in_slot = 0;
  int out_slot = 0;
};

struct StateCircle {
  /// Smoothing arcs in traversal order (empty for a crossingless circle).
  std::vector<StatePass> passes;
  /// Diagram arcs in traversal order.
  std::vector<int> arcs;
};

/// The circles of a Kauffman state, traced from the smallest unused arc
/// label along that arc's orientation.
struct Resolution {
  std::vector<StateCircle> circles;
  std::vector<int> circle_of_arc;  // indexed by arc label - 1
  /// For each crossing, the circle through each of its two smoothing arcs.
  std::vector<std::array<int, 2>> connector;

  int circle_count() const noexcept { return static_cast<int>(circles.size()); }
};

Resolution resolve(const LinkDiagram& d, const KauffmanState& s);

/// Circle count only, by union-find over arcs.
int count_circles(const LinkDiagram& d, const KauffmanState& s);

/// Per-circle orientation flag: true (clockwise) iff the circle is nested
/// inside an odd number of other circles. Nesting is read off the region
/// tree of the state: regions are unions of diagram faces, state circles
/// separate adjacent regions, and the largest diagram face is taken as the
/// unbounded one.
std::vector<bool> nesting_parity(const LinkDiagram& d, const KauffmanState& s, const Resolution& r);

/// Spanning subgraph: every vertex, the edges with a nonzero flag.
struct SpanningSubgraph {
  std::vector<std::uint8_t> edges;

  static SpanningSubgraph none(int edge_count) {
    return {std::vector<std::uint8_t>(static_cast<std::size_t>(edge_count), 0)};
  }
  static SpanningSubgraph full(int edge_count) {
    return {std::vector<std::uint8_t>(static_cast<std::size_t>(edge_count), 1)};
  }
  static SpanningSubgraph from_mask(int edge_count, std::uint64_t mask);
  bool has(int e) const { return edges.at(static_cast<std::size_t>(e)) != 0; }
  int edge_count() const noexcept;
};

struct SubgraphStats {
  int v = 0;
  int e = 0;
  int f = 0;
  int k = 0;
  int g = 0;
};

/// Ribbon graph of a state: state circles as vertices, crossings as edges.
/// Edge x has half-edges 2x (on the smoothing arc through slot 0) and
/// 2x+1. The rotation at each vertex is the order in which its oriented
/// circle passes the half-edges, circles oriented by nesting parity
/// (counterclockwise when not nested or nested an even number of times).
class RibbonGraph {
 public:
  RibbonGraph() = default;

  int vertex_count() const noexcept { return static_cast<int>(cycles_.size()); }
  int edge_count() const noexcept { return static_cast<int>(half_vertex_.size() / 2); }
  int vertex_of(int half_edge) const { return half_vertex_.at(static_cast<std::size_t>(half_edge)); }
  /// Next half-edge in the rotation at its vertex.
  int rotation_next(int half_edge) const { return rot_next_.at(static_cast<std::size_t>(half_edge)); }
  /// Position of the half-edge inside its vertex cycle.
  int rotation_index(int half_edge) const { return rot_index_.at(static_cast<std::size_t>(half_edge)); }
  const std::vector<int>& vertex_cycle(int v) const { return cycles_.at(static_cast<std::size_t>(v)); }
  bool clockwise(int v) const { return clockwise_.at(static_cast<std::size_t>(v)) != 0; }
  bool is_loop(int e) const { return vertex_of(2 * e) == vertex_of(2 * e + 1); }

  /// v, e, f, k, g of the whole graph.
  const SubgraphStats& stats() const noexcept { return stats_; }

  /// Assembles a ribbon graph from vertex cycles of half-edges.
  static RibbonGraph from_cycles(std::vector<std::vector<int>> cycles, std::vector<bool> clockwise);

  friend RibbonGraph ribbon_graph(const LinkDiagram& d, const KauffmanState& s);

 private:
  std::vector<std::vector<int>> cycles_;
  std::vector<std::uint8_t> clockwise_;
  std::vector<int> half_vertex_;
  std::vector<int> rot_next_;
  std::vector<int> rot_index_;
  SubgraphStats stats_;
};

RibbonGraph ribbon_graph(const LinkDiagram& d, const KauffmanState& s);

/// All-A (resp. all-B) ribbon graph.
RibbonGraph ribbon_graph_a(const LinkDiagram& d);
RibbonGraph ribbon_graph_b(const LinkDiagram& d);

/// Boundary walks of the ribbon subsurface, traced from scratch.
int faces(const RibbonGraph& g, const SpanningSubgraph& h);
int components(const RibbonGraph& g, const SpanningSubgraph& h);
/// Throws InvariantViolation when the genus formula gives a negative or
/// non-integral value.
SubgraphStats subgraph_stats(const RibbonGraph& g, const SpanningSubgraph& h);

std::vector<int> loop_edges(const RibbonGraph& g);
SpanningSubgraph loop_subgraph(const RibbonGraph& g);
bool has_one_edge_loop(const RibbonGraph& g);

/// The state paired with a spanning subgraph of the all-A graph: B on the
/// edges of h, A elsewhere.
KauffmanState dual_state(const SpanningSubgraph& h);

/// Maintains the face count of a spanning subgraph under single-edge
/// toggles. Each toggle attaches or detaches one band; the count moves by
/// +1 when the two attaching corners share a boundary walk and by -1
/// otherwise.
class IncrementalFaces {
 public:
  /// Starts from the edgeless subgraph.
  explicit IncrementalFaces(const RibbonGraph& g);

  int faces() const noexcept { return faces_; }
  int edge_count() const noexcept { return active_edges_; }
  bool contains(int e) const { return active_.at(static_cast<std::size_t>(2 * e)) != 0; }
  /// Adds or removes edge e; returns the new face count.
  int toggle(int e);

 private:
  int next_active(int half_edge) const;
  int corner_token(int half_edge) const;
  bool same_face(int t1, int t2) const;

  const RibbonGraph* g_;
  std::vector<std::uint8_t> active_;
  std::vector<int> vertex_degree_;
  int faces_;
  int active_edges_ = 0;
};

/// Text rendering: one line per vertex listing its rotation as
/// `x<crossing>.<side>` labels.
std::string describe(const RibbonGraph& g);
/// Graphviz description of the ribbon graph.
std::string to_dot(const RibbonGraph& g, const std::string& name = "ribbon");

}  // namespace jonesdeg
