#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "jonesdeg/bracket.hpp"
#include "jonesdeg/error.hpp"

namespace jonesdeg {
namespace {

// How a slot of the crossing being absorbed attaches to what came before.
enum class SlotKind { boundary, self, fresh };

struct SlotPlan {
  SlotKind kind = SlotKind::fresh;
  int boundary_pos = -1;  // kind == boundary
  int other_slot = -1;    // kind == self
  int new_pos = -1;       // kind == fresh: position in the next boundary
};

struct StepPlan {
  int crossing = 0;
  SlotPlan slot[4];
  /// Next boundary position of each surviving old boundary point, or -1.
  std::vector<int> survivor_pos;
  int next_width = 0;
};

// Greedy order from a given first crossing: absorb next the crossing with
// the most arcs already attached to the processed part, preferring fewer
// new open ends.
std::vector<int> greedy_order(const LinkDiagram& d, int first) {
  const int c = d.crossing_count();
  std::vector<std::uint8_t> done(static_cast<std::size_t>(c), 0);
  std::vector<int> order{first};
  done[static_cast<std::size_t>(first)] = 1;
  while (static_cast<int>(order.size()) < c) {
    int best = -1;
    int best_score = -1000;
    for (int x = 0; x < c; ++x) {
      if (done[static_cast<std::size_t>(x)]) continue;
      int attached = 0;
      int fresh = 0;
      for (int s = 0; s < 4; ++s) {
        const SlotRef o = d.other_end({x, s});
        if (o.crossing == x) continue;
        if (done[static_cast<std::size_t>(o.crossing)]) {
          ++attached;
        } else {
          ++fresh;
        }
      }
      const int score = 8 * attached - fresh;
      if (attached > 0 && score > best_score) {
        best_score = score;
        best = x;
      }
    }
    if (best < 0) throw InvariantViolation("sweep order: diagram is disconnected");
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
  }
  return order;
}

// Open ends after each step of an order.
std::vector<int> widths(const LinkDiagram& d, const std::vector<int>& order) {
  std::vector<std::uint8_t> done(static_cast<std::size_t>(d.crossing_count()), 0);
  std::vector<int> out;
  int w = 0;
  for (int x : order) {
    for (int s = 0; s < 4; ++s) {
      const SlotRef o = d.other_end({x, s});
      if (o.crossing == x) continue;
      w += done[static_cast<std::size_t>(o.crossing)] ? -1 : 1;
    }
    done[static_cast<std::size_t>(x)] = 1;
    out.push_back(w);
  }
  return out;
}

// The table count grows roughly exponentially in the boundary width, so
// keep the greedy order whose widest boundary is smallest, then the one
// with the smallest total.
std::vector<int> sweep_order(const LinkDiagram& d) {
  std::vector<int> best;
  std::pair<int, long> best_cost{0, 0};
  for (int first = 0; first < d.crossing_count(); ++first) {
    std::vector<int> order = greedy_order(d, first);
    const std::vector<int> w = widths(d, order);
    const std::pair<int, long> cost{*std::max_element(w.begin(), w.end()),
                                    std::accumulate(w.begin(), w.end(), 0L)};
    if (best.empty() || cost < best_cost) {
      best = std::move(order);
      best_cost = cost;
    }
  }
  return best;
}

std::vector<StepPlan> plan_sweep(const LinkDiagram& d, const std::vector<int>& order) {
  std::vector<StepPlan> plans;
  std::vector<int> boundary;  // arc labels of open ends, in position order
  std::vector<std::uint8_t> done(static_cast<std::size_t>(d.crossing_count()), 0);
  for (int x : order) {
    StepPlan p;
    p.crossing = x;
    std::vector<std::uint8_t> consumed(boundary.size(), 0);
    std::vector<int> fresh_arcs;
    for (int s = 0; s < 4; ++s) {
      const SlotRef o = d.other_end({x, s});
      const int arc = d.arc_at({x, s});
      SlotPlan& sp = p.slot[s];
      if (o.crossing == x) {
        sp.kind = SlotKind::self;
        sp.other_slot = o.slot;
      } else if (done[static_cast<std::size_t>(o.crossing)]) {
        sp.kind = SlotKind::boundary;
        const auto it = std::find(boundary.begin(), boundary.end(), arc);
        if (it == boundary.end()) throw InvariantViolation("sweep: attached arc missing from boundary");
        sp.boundary_pos = static_cast<int>(it - boundary.begin());
        consumed[static_cast<std::size_t>(sp.boundary_pos)] = 1;
      } else {
        sp.kind = SlotKind::fresh;
        fresh_arcs.push_back(arc);
      }
    }
    std::vector<int> next;
    p.survivor_pos.assign(boundary.size(), -1);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      if (consumed[i]) continue;
      p.survivor_pos[i] = static_cast<int>(next.size());
      next.push_back(boundary[i]);
    }
    for (int s = 0; s < 4; ++s) {
      if (p.slot[s].kind != SlotKind::fresh) continue;
      p.slot[s].new_pos = static_cast<int>(next.size());
      next.push_back(d.arc_at({x, s}));
    }
    p.next_width = static_cast<int>(next.size());
    boundary = std::move(next);
    done[static_cast<std::size_t>(x)] = 1;
    plans.push_back(std::move(p));
  }
  if (!boundary.empty()) throw InvariantViolation("sweep: open ends remain after the last crossing");
  return plans;
}

// Tally of the processed crossings for one boundary matching, indexed by
// (A-smoothings, closed circles).
struct Table {
  int rows = 0;
  int cols = 0;
  std::vector<TallyCount> cells;

  Table(int r, int c) : rows(r), cols(c), cells(static_cast<std::size_t>(r * c), 0) {}
  TallyCount& at(int a, int k) { return cells[static_cast<std::size_t>(a * cols + k)]; }
  TallyCount at(int a, int k) const { return cells[static_cast<std::size_t>(a * cols + k)]; }
};

struct Layer {
  std::vector<std::string> keys;  // partner byte per boundary position
  std::vector<Table> tables;
  std::unordered_map<std::string, std::size_t> index;

  Table& slot_for(const std::string& key, int rows, int cols) {
    auto [it, inserted] = index.try_emplace(key, tables.size());
    if (inserted) {
      keys.push_back(key);
      tables.emplace_back(rows, cols);
    }
    return tables[it->second];
  }
};

}  // namespace

StateTally tally_fast(const LinkDiagram& d, const BracketOptions& opt) {
  const int c = d.crossing_count();
  if (c == 0) {
    StateTally t(0, d.free_circles());
    t.add(0, d.free_circles(), 1);
    return t;
  }
  if (c > 126) throw ResourceLimit("sweep engine supports at most 126 crossings");
  const std::vector<int> order = sweep_order(d);
  const std::vector<StepPlan> plans = plan_sweep(d, order);

  Layer cur;
  cur.slot_for(std::string(), 1, 1).at(0, 0) = 1;
  int width = 0;
  std::size_t peak_matchings = 1;

  for (std::size_t step = 0; step < plans.size(); ++step) {
    const StepPlan& p = plans[step];
    const int rows = static_cast<int>(step) + 2;  // A-count 0..step+1
    const int cols = static_cast<int>(step) + 3;  // closed circles 0..step+2
    Layer next;
    // Nodes: old boundary positions [0, width), then the four slots.
    const int n_nodes = width + 4;
    std::vector<int> link1(static_cast<std::size_t>(n_nodes));
    std::vector<int> link2(static_cast<std::size_t>(n_nodes));
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(n_nodes));
    std::string key(static_cast<std::size_t>(p.next_width), '\0');

    for (std::size_t m = 0; m < cur.keys.size(); ++m) {
      const std::string& match = cur.keys[m];
      const Table& tab = cur.tables[m];
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        std::fill(link2.begin(), link2.end(), -1);
        for (int i = 0; i < width; ++i) link1[static_cast<std::size_t>(i)] = static_cast<unsigned char>(match[static_cast<std::size_t>(i)]);
        static constexpr int a_partner[4] = {1, 0, 3, 2};
        static constexpr int b_partner[4] = {3, 2, 1, 0};
        for (int s = 0; s < 4; ++s) {
          const int node = width + s;
          link1[static_cast<std::size_t>(node)] = width + (smoothing == 0 ? a_partner[s] : b_partner[s]);
          const SlotPlan& sp = p.slot[s];
          if (sp.kind == SlotKind::boundary) {
            link2[static_cast<std::size_t>(node)] = sp.boundary_pos;
            link2[static_cast<std::size_t>(sp.boundary_pos)] = node;
          } else if (sp.kind == SlotKind::self) {
            link2[static_cast<std::size_t>(node)] = width + sp.other_slot;
          }
        }
        auto next_pos = [&](int node) {
          if (node < width) return p.survivor_pos[static_cast<std::size_t>(node)];
          const SlotPlan& sp = p.slot[node - width];
          return sp.kind == SlotKind::fresh ? sp.new_pos : -1;
        };
        std::fill(visited.begin(), visited.end(), 0);
        // Strands alternate between link1 edges (matching or smoothing)
        // and link2 edges (arcs). Open ends have no link2 edge.
        for (int start = 0; start < n_nodes; ++start) {
          if (visited[static_cast<std::size_t>(start)] || next_pos(start) < 0) continue;
          int node = start;
          visited[static_cast<std::size_t>(node)] = 1;
          while (true) {
            node = link1[static_cast<std::size_t>(node)];
            visited[static_cast<std::size_t>(node)] = 1;
            const int l2 = link2[static_cast<std::size_t>(node)];
            if (l2 < 0) break;
            node = l2;
            visited[static_cast<std::size_t>(node)] = 1;
          }
          key[static_cast<std::size_t>(next_pos(start))] = static_cast<char>(next_pos(node));
          key[static_cast<std::size_t>(next_pos(node))] = static_cast<char>(next_pos(start));
        }
        // Whatever is left closes up into circles.
        int closed = 0;
        for (int start = 0; start < n_nodes; ++start) {
          if (visited[static_cast<std::size_t>(start)]) continue;
          ++closed;
          int node = start;
          do {
            visited[static_cast<std::size_t>(node)] = 1;
            node = link1[static_cast<std::size_t>(node)];
            visited[static_cast<std::size_t>(node)] = 1;
            node = link2[static_cast<std::size_t>(node)];
          } while (node != start);
        }
        Table& out = next.slot_for(key, rows, cols);
        const int da = smoothing == 0 ? 1 : 0;
        for (int a = 0; a < tab.rows; ++a) {
          for (int k = 0; k < tab.cols; ++k) {
            const TallyCount v = tab.at(a, k);
            if (v != 0) out.at(a + da, k + closed) += v;
          }
        }
      }
      const std::uint64_t cells = static_cast<std::uint64_t>(next.tables.size()) * static_cast<std::uint64_t>(rows * cols);
      if (cells > opt.sweep_cell_budget) {
        throw ResourceLimit("sweep engine exceeded its cell budget",
                            "absorbed " + std::to_string(step) + " of " + std::to_string(c) + " crossings; " +
                                std::to_string(next.tables.size()) + " boundary matchings over " +
                                std::to_string(p.next_width) + " open ends");
      }
    }
    peak_matchings = std::max(peak_matchings, next.tables.size());
    cur = std::move(next);
    width = p.next_width;
  }
  if (cur.tables.size() != 1 || width != 0) throw InvariantViolation("sweep did not close every strand");
  const Table& fin = cur.tables.front();
  StateTally t(c, c + 1);
  for (int a = 0; a < fin.rows; ++a) {
    for (int k = 0; k < fin.cols; ++k) {
      if (fin.at(a, k) != 0) t.add(a, k, fin.at(a, k));
    }
  }
  (void)peak_matchings;
  return t;
}

}  // namespace jonesdeg
