#include "jonesdeg/states.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "jonesdeg/error.hpp"

namespace jonesdeg {
namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

void check_state(const LinkDiagram& d, const KauffmanState& s) {
  if (s.size() != d.crossing_count()) {
    throw std::invalid_argument("state has " + std::to_string(s.size()) + " choices for " +
                                std::to_string(d.crossing_count()) + " crossings");
  }
}

// Region of the state that lies on the left of a pass leaving through
// `out_slot`, and on its right.
int corner_index(int crossing, int slot) { return 4 * crossing + slot; }

}  // namespace

KauffmanState KauffmanState::from_b_mask(int crossings, std::uint64_t b_mask) {
  std::vector<Smoothing> c(static_cast<std::size_t>(crossings), Smoothing::A);
  for (int x = 0; x < crossings && x < 64; ++x) {
    if ((b_mask >> x) & 1u) c[static_cast<std::size_t>(x)] = Smoothing::B;
  }
  return KauffmanState(std::move(c));
}

int KauffmanState::a_count() const noexcept {
  return static_cast<int>(std::count(choice_.begin(), choice_.end(), Smoothing::A));
}

Resolution resolve(const LinkDiagram& d, const KauffmanState& s) {
  check_state(d, s);
  Resolution r;
  const int c = d.crossing_count();
  if (c == 0) {
    r.circles.resize(static_cast<std::size_t>(d.free_circles()));
    return r;
  }
  r.circle_of_arc.assign(static_cast<std::size_t>(d.arc_count()), -1);
  r.connector.assign(static_cast<std::size_t>(c), {-1, -1});
  for (int start = 1; start <= d.arc_count(); ++start) {
    if (r.circle_of_arc[static_cast<std::size_t>(start - 1)] >= 0) continue;
    const int id = r.circle_count();
    StateCircle circle;
    int arc = start;
    SlotRef arrive = d.head(start);
    while (true) {
      circle.arcs.push_back(arc);
      r.circle_of_arc[static_cast<std::size_t>(arc - 1)] = id;
      const Smoothing sm = s.at(arrive.crossing);
      const int out = smoothing_partner(sm, arrive.slot);
      const int side = smoothing_side(sm, arrive.slot);
      circle.passes.push_back({arrive.crossing, side, arrive.slot, out});
      r.connector[static_cast<std::size_t>(arrive.crossing)][static_cast<std::size_t>(side)] = id;
      const SlotRef leave{arrive.crossing, out};
      arc = d.arc_at(leave);
      if (arc == start) {
        if (leave != d.tail(start)) throw InvariantViolation("state circle retraces an arc");
        break;
      }
      arrive = d.other_end(leave);
    }
    r.circles.push_back(std::move(circle));
  }
  return r;
}

int count_circles(const LinkDiagram& d, const KauffmanState& s) {
  check_state(d, s);
  const int c = d.crossing_count();
  if (c == 0) return d.free_circles();
  Dsu dsu(static_cast<std::size_t>(d.arc_count() + 1));
  int circles = d.arc_count();
  for (int x = 0; x < c; ++x) {
    const auto& sl = d.crossing(x).slots;
    if (s.at(x) == Smoothing::A) {
      circles -= dsu.unite(sl[0], sl[1]);
      circles -= dsu.unite(sl[2], sl[3]);
    } else {
      circles -= dsu.unite(sl[3], sl[0]);
      circles -= dsu.unite(sl[1], sl[2]);
    }
  }
  return circles;
}

namespace {

struct RegionData {
  std::vector<int> region_of_face;
  int region_count = 0;
  int root = 0;
};

// Smoothing at a crossing merges the two faces meeting across its middle:
// corners 1 and 3 for A, corners 0 and 2 for B.
RegionData state_regions(const LinkDiagram& d, const KauffmanState& s) {
  RegionData out;
  const auto& cf = d.corner_faces();
  Dsu dsu(static_cast<std::size_t>(d.face_count()));
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (s.at(x) == Smoothing::A) {
      dsu.unite(cf[static_cast<std::size_t>(corner_index(x, 1))], cf[static_cast<std::size_t>(corner_index(x, 3))]);
    } else {
      dsu.unite(cf[static_cast<std::size_t>(corner_index(x, 0))], cf[static_cast<std::size_t>(corner_index(x, 2))]);
    }
  }
  out.region_of_face.assign(static_cast<std::size_t>(d.face_count()), -1);
  std::vector<int> id_of_root(static_cast<std::size_t>(d.face_count()), -1);
  for (int f = 0; f < d.face_count(); ++f) {
    const int rt = dsu.find(f);
    if (id_of_root[static_cast<std::size_t>(rt)] < 0) id_of_root[static_cast<std::size_t>(rt)] = out.region_count++;
    out.region_of_face[static_cast<std::size_t>(f)] = id_of_root[static_cast<std::size_t>(rt)];
  }
  std::vector<int> size(static_cast<std::size_t>(d.face_count()), 0);
  for (int f : cf) ++size[static_cast<std::size_t>(f)];
  int outer = 0;
  for (int f = 1; f < d.face_count(); ++f) {
    if (size[static_cast<std::size_t>(f)] > size[static_cast<std::size_t>(outer)]) outer = f;
  }
  out.root = out.region_of_face[static_cast<std::size_t>(outer)];
  return out;
}

int left_region(const LinkDiagram& d, const RegionData& rd, const StatePass& p) {
  const int f = d.corner_faces()[static_cast<std::size_t>(corner_index(p.crossing, p.out_slot))];
  return rd.region_of_face[static_cast<std::size_t>(f)];
}

int right_region(const LinkDiagram& d, const RegionData& rd, const StatePass& p) {
  const int f = d.corner_faces()[static_cast<std::size_t>(corner_index(p.crossing, (p.out_slot + 3) % 4))];
  return rd.region_of_face[static_cast<std::size_t>(f)];
}

struct NestingData {
  RegionData regions;
  std::vector<int> depth;            // per region
  std::vector<bool> clockwise;       // per circle
  std::vector<bool> reverse_trace;   // per circle
};

NestingData nesting(const LinkDiagram& d, const KauffmanState& s, const Resolution& r) {
  NestingData nd;
  const int nc = r.circle_count();
  nd.clockwise.assign(static_cast<std::size_t>(nc), false);
  nd.reverse_trace.assign(static_cast<std::size_t>(nc), false);
  if (d.crossing_count() == 0) return nd;  // disjoint unnested circles

  nd.regions = state_regions(d, s);
  const int nr = nd.regions.region_count;
  if (nr != nc + 1) {
    throw InvariantViolation("state has " + std::to_string(nc) + " circles but " + std::to_string(nr) +
                             " regions");
  }
  std::vector<std::array<int, 2>> sides(static_cast<std::size_t>(nc));
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nr));
  for (int i = 0; i < nc; ++i) {
    const auto& p = r.circles[static_cast<std::size_t>(i)].passes.front();
    const int l = left_region(d, nd.regions, p);
    const int rr = right_region(d, nd.regions, p);
    if (l == rr) throw InvariantViolation("state circle with the same region on both sides");
    sides[static_cast<std::size_t>(i)] = {l, rr};
    adj[static_cast<std::size_t>(l)].push_back({rr, i});
    adj[static_cast<std::size_t>(rr)].push_back({l, i});
  }
  nd.depth.assign(static_cast<std::size_t>(nr), -1);
  std::queue<int> q;
  nd.depth[static_cast<std::size_t>(nd.regions.root)] = 0;
  q.push(nd.regions.root);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (const auto& [w, circle] : adj[static_cast<std::size_t>(u)]) {
      (void)circle;
      if (nd.depth[static_cast<std::size_t>(w)] < 0) {
        nd.depth[static_cast<std::size_t>(w)] = nd.depth[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  for (int i = 0; i < nc; ++i) {
    const auto [l, rr] = sides[static_cast<std::size_t>(i)];
    const int dl = nd.depth[static_cast<std::size_t>(l)];
    const int dr = nd.depth[static_cast<std::size_t>(rr)];
    if (dl < 0 || dr < 0 || std::abs(dl - dr) != 1) throw InvariantViolation("region graph is not a tree");
    const int near_depth = std::min(dl, dr);
    const bool cw = (near_depth % 2) != 0;
    nd.clockwise[static_cast<std::size_t>(i)] = cw;
    // Counterclockwise means the far (inner) region is on the left.
    const bool inner_on_left = dl > dr;
    nd.reverse_trace[static_cast<std::size_t>(i)] = (inner_on_left == cw);
  }
  return nd;
}

}  // namespace

std::vector<bool> nesting_parity(const LinkDiagram& d, const KauffmanState& s, const Resolution& r) {
  return nesting(d, s, r).clockwise;
}

SpanningSubgraph SpanningSubgraph::from_mask(int edge_count, std::uint64_t mask) {
  SpanningSubgraph h = none(edge_count);
  for (int e = 0; e < edge_count && e < 64; ++e) h.edges[static_cast<std::size_t>(e)] = (mask >> e) & 1u;
  return h;
}

int SpanningSubgraph::edge_count() const noexcept {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](std::uint8_t b) { return b != 0; }));
}

RibbonGraph RibbonGraph::from_cycles(std::vector<std::vector<int>> cycles, std::vector<bool> clockwise) {
  RibbonGraph g;
  std::size_t halves = 0;
  for (const auto& c : cycles) halves += c.size();
  if (halves % 2 != 0) throw InvariantViolation("odd number of half-edges");
  g.half_vertex_.assign(halves, -1);
  g.rot_next_.assign(halves, -1);
  g.rot_index_.assign(halves, -1);
  for (std::size_t v = 0; v < cycles.size(); ++v) {
    const auto& c = cycles[v];
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int h = c[i];
      if (h < 0 || static_cast<std::size_t>(h) >= halves || g.half_vertex_[static_cast<std::size_t>(h)] >= 0) {
        throw InvariantViolation("half-edge " + std::to_string(h) + " missing or repeated in rotation");
      }
      g.half_vertex_[static_cast<std::size_t>(h)] = static_cast<int>(v);
      g.rot_next_[static_cast<std::size_t>(h)] = c[(i + 1) % c.size()];
      g.rot_index_[static_cast<std::size_t>(h)] = static_cast<int>(i);
    }
  }
  g.cycles_ = std::move(cycles);
  g.clockwise_.assign(g.cycles_.size(), 0);
  for (std::size_t v = 0; v < clockwise.size() && v < g.cycles_.size(); ++v) g.clockwise_[v] = clockwise[v];
  g.stats_ = subgraph_stats(g, SpanningSubgraph::full(g.edge_count()));
  return g;
}

RibbonGraph ribbon_graph(const LinkDiagram& d, const KauffmanState& s) {
  const Resolution r = resolve(d, s);
  const NestingData nd = nesting(d, s, r);
  std::vector<std::vector<int>> cycles;
  cycles.reserve(static_cast<std::size_t>(r.circle_count()));
  // Side of the crossing's middle region seen from each pass: +1 left, -1 right.
  std::vector<std::array<int, 2>> middle_side(static_cast<std::size_t>(d.crossing_count()), {0, 0});
  for (int i = 0; i < r.circle_count(); ++i) {
    const auto& passes = r.circles[static_cast<std::size_t>(i)].passes;
    std::vector<int> cyc;
    cyc.reserve(passes.size());
    const bool rev = nd.reverse_trace[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < passes.size(); ++k) {
      StatePass p = rev ? passes[passes.size() - 1 - k] : passes[k];
      if (rev) std::swap(p.in_slot, p.out_slot);
      cyc.push_back(2 * p.crossing + p.side);
      const int middle_corner = s.at(p.crossing) == Smoothing::A ? 1 : 0;
      const int mid = nd.regions.region_of_face[static_cast<std::size_t>(
          d.corner_faces()[static_cast<std::size_t>(corner_index(p.crossing, middle_corner))])];
      const int l = left_region(d, nd.regions, p);
      const int rr = right_region(d, nd.regions, p);
      if (mid != l && mid != rr) throw InvariantViolation("pass does not border the crossing's middle region");
      middle_side[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.side)] = (mid == l) ? 1 : -1;
    }
    cycles.push_back(std::move(cyc));
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& ms = middle_side[static_cast<std::size_t>(x)];
    if (ms[0] != ms[1]) {
      throw InvariantViolation("incoherent circle orientations at crossing " + std::to_string(x));
    }
  }
  return RibbonGraph::from_cycles(std::move(cycles), nd.clockwise);
}

RibbonGraph ribbon_graph_a(const LinkDiagram& d) {
  return ribbon_graph(d, KauffmanState::all(d.crossing_count(), Smoothing::A));
}

RibbonGraph ribbon_graph_b(const LinkDiagram& d) {
  return ribbon_graph(d, KauffmanState::all(d.crossing_count(), Smoothing::B));
}

int faces(const RibbonGraph& g, const SpanningSubgraph& h) {
  if (static_cast<int>(h.edges.size()) != g.edge_count()) {
    throw std::invalid_argument("spanning subgraph size does not match the ribbon graph");
  }
  const int halves = 2 * g.edge_count();
  std::vector<int> next(static_cast<std::size_t>(halves), -1);
  int f = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> act;
    for (int he : g.vertex_cycle(v)) {
      if (h.has(he / 2)) act.push_back(he);
    }
    if (act.empty()) {
      ++f;  // isolated vertex: one disk
      continue;
    }
    for (std::size_t i = 0; i < act.size(); ++i) {
      next[static_cast<std::size_t>(act[i])] = act[(i + 1) % act.size()];
    }
  }
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(halves), 0);
  for (int start = 0; start < halves; ++start) {
    if (!h.has(start / 2) || seen[static_cast<std::size_t>(start)]) continue;
    ++f;
    int cur = start;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      cur = next[static_cast<std::size_t>(cur ^ 1)];
    }
  }
  return f;
}

int components(const RibbonGraph& g, const SpanningSubgraph& h) {
  Dsu dsu(static_cast<std::size_t>(g.vertex_count()));
  int k = g.vertex_count();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (h.has(e)) k -= dsu.unite(g.vertex_of(2 * e), g.vertex_of(2 * e + 1));
  }
  return k;
}

SubgraphStats subgraph_stats(const RibbonGraph& g, const SpanningSubgraph& h) {
  SubgraphStats st;
  st.v = g.vertex_count();
  st.e = h.edge_count();
  st.f = faces(g, h);
  st.k = components(g, h);
  const int twice = 2 * st.k - st.v + st.e - st.f;
  if (twice < 0 || twice % 2 != 0) {
    throw InvariantViolation("genus formula gives " + std::to_string(twice) + "/2 (v=" + std::to_string(st.v) +
                             ", e=" + std::to_string(st.e) + ", f=" + std::to_string(st.f) +
                             ", k=" + std::to_string(st.k) + ")");
  }
  st.g = twice / 2;
  return st;
}

std::vector<int> loop_edges(const RibbonGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) out.push_back(e);
  }
  return out;
}

SpanningSubgraph loop_subgraph(const RibbonGraph& g) {
  SpanningSubgraph h = SpanningSubgraph::none(g.edge_count());
  for (int e : loop_edges(g)) h.edges[static_cast<std::size_t>(e)] = 1;
  return h;
}

bool has_one_edge_loop(const RibbonGraph& g) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) return true;
  }
  return false;
}

KauffmanState dual_state(const SpanningSubgraph& h) {
  std::vector<Smoothing> c(h.edges.size(), Smoothing::A);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    if (h.edges[e]) c[e] = Smoothing::B;
  }
  return KauffmanState(std::move(c));
}

IncrementalFaces::IncrementalFaces(const RibbonGraph& g)
    : g_(&g),
      active_(static_cast<std::size_t>(2 * g.edge_count()), 0),
      vertex_degree_(static_cast<std::size_t>(g.vertex_count()), 0),
      faces_(g.vertex_count()) {}

int IncrementalFaces::next_active(int half_edge) const {
  int cur = g_->rotation_next(half_edge);
  while (!active_[static_cast<std::size_t>(cur)]) {
    if (cur == half_edge) return -1;
    cur = g_->rotation_next(cur);
  }
  return cur;
}

// Boundary walks pass a corner of a vertex just before the active
// half-edge that closes it, so that half-edge names the corner. A vertex
// without active half-edges is its own boundary walk.
int IncrementalFaces::corner_token(int half_edge) const {
  const int v = g_->vertex_of(half_edge);
  if (vertex_degree_[static_cast<std::size_t>(v)] == 0) return -1 - v;
  return next_active(half_edge);
}

bool IncrementalFaces::same_face(int t1, int t2) const {
  if (t1 < 0 || t2 < 0) return t1 == t2;
  int cur = t1;
  do {
    if (cur == t2) return true;
    cur = next_active(cur ^ 1);
  } while (cur != t1);
  return false;
}

int IncrementalFaces::toggle(int e) {
  const int h1 = 2 * e;
  const int h2 = 2 * e + 1;
  const auto v1 = static_cast<std::size_t>(g_->vertex_of(h1));
  const auto v2 = static_cast<std::size_t>(g_->vertex_of(h2));
  if (!contains(e)) {
    const int t1 = corner_token(h1);
    const int t2 = corner_token(h2);
    faces_ += same_face(t1, t2) ? 1 : -1;
    active_[static_cast<std::size_t>(h1)] = active_[static_cast<std::size_t>(h2)] = 1;
    ++vertex_degree_[v1];
    ++vertex_degree_[v2];
    ++active_edges_;
  } else {
    active_[static_cast<std::size_t>(h1)] = active_[static_cast<std::size_t>(h2)] = 0;
    --vertex_degree_[v1];
    --vertex_degree_[v2];
    --active_edges_;
    const int t1 = corner_token(h1);
    const int t2 = corner_token(h2);
    faces_ -= same_face(t1, t2) ? 1 : -1;
  }
  return faces_;
}

std::string describe(const RibbonGraph& g) {
  std::ostringstream os;
  const auto& st = g.stats();
  os << "ribbon graph: v=" << st.v << " e=" << st.e << " f=" << st.f << " k=" << st.k << " g=" << st.g << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  vertex " << v << (g.clockwise(v) ? " (cw):" : " (ccw):");
    for (int h : g.vertex_cycle(v)) os << " x" << h / 2 << '.' << h % 2;
    os << '\n';
  }
  return os.str();
}

std::string to_dot(const RibbonGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << v << (g.clockwise(v) ? " cw" : " ccw") << "\"];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    os << "  v" << g.vertex_of(2 * e) << " -- v" << g.vertex_of(2 * e + 1) << " [label=\"x" << e << "\"";
    os << ", taillabel=\"" << g.rotation_index(2 * e) << "\", headlabel=\"" << g.rotation_index(2 * e + 1)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace jonesdeg
