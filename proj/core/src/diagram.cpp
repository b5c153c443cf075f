#include "jonesdeg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

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
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::string crossing_text(const std::array<int, 4>& s) {
  return "X[" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) +
         "," + std::to_string(s[3]) + "]";
}

// Recovers crossing signs from PD labels: every arc label 1..2c appears
// twice, each component is a consecutive label range traversed in
// increasing order, and the understrand runs slot 0 -> 2.
std::vector<int> derive_signs(const std::vector<std::array<int, 4>>& xs) {
  const int c = static_cast<int>(xs.size());
  const int n_arcs = 2 * c;
  std::vector<int> seen(static_cast<std::size_t>(n_arcs + 1), 0);
  for (const auto& s : xs) {
    for (int a : s) {
      if (a < 1 || a > n_arcs) {
        throw ParseError("arc label " + std::to_string(a) + " outside 1.." + std::to_string(n_arcs) +
                         " in " + crossing_text(s));
      }
      ++seen[static_cast<std::size_t>(a)];
    }
  }
  for (int a = 1; a <= n_arcs; ++a) {
    if (seen[static_cast<std::size_t>(a)] != 2) {
      throw ParseError("arc " + std::to_string(a) + " appears " +
                       std::to_string(seen[static_cast<std::size_t>(a)]) + " times (expected 2)");
    }
  }

  Dsu dsu(static_cast<std::size_t>(n_arcs + 1));
  for (const auto& s : xs) {
    dsu.unite(s[0], s[2]);
    dsu.unite(s[1], s[3]);
  }
  std::vector<int> lo(static_cast<std::size_t>(n_arcs + 1), n_arcs + 1);
  std::vector<int> hi(static_cast<std::size_t>(n_arcs + 1), 0);
  std::vector<int> size(static_cast<std::size_t>(n_arcs + 1), 0);
  for (int a = 1; a <= n_arcs; ++a) {
    const auto r = static_cast<std::size_t>(dsu.find(a));
    lo[r] = std::min(lo[r], a);
    hi[r] = std::max(hi[r], a);
    ++size[r];
  }
  auto root = [&](int a) { return static_cast<std::size_t>(dsu.find(a)); };
  for (int a = 1; a <= n_arcs; ++a) {
    const auto r = root(a);
    if (hi[r] - lo[r] + 1 != size[r]) {
      throw ParseError("arc numbering of the component containing arc " + std::to_string(a) +
                       " is not consecutive");
    }
    if (size[r] < 2) {
      throw ParseError("component of arc " + std::to_string(a) + " has a single arc");
    }
  }
  auto next = [&](int a) { return a == hi[root(a)] ? lo[root(a)] : a + 1; };

  // Each transition a -> next(a) is realised by exactly one strand pass.
  std::vector<int> used(static_cast<std::size_t>(n_arcs + 1), 0);
  std::vector<int> sign(static_cast<std::size_t>(c), 0);
  for (int x = 0; x < c; ++x) {
    const auto& s = xs[static_cast<std::size_t>(x)];
    if (next(s[0]) != s[2]) {
      throw ParseError("understrand of " + crossing_text(s) + " does not run between consecutive arcs");
    }
    ++used[static_cast<std::size_t>(s[0])];
    const bool neg = next(s[1]) == s[3];  // over runs 1 -> 3
    const bool pos = next(s[3]) == s[1];  // over runs 3 -> 1
    if (!neg && !pos) {
      throw ParseError("overstrand of " + crossing_text(s) + " does not run between consecutive arcs");
    }
    if (pos != neg) {
      sign[static_cast<std::size_t>(x)] = pos ? 1 : -1;
      ++used[static_cast<std::size_t>(pos ? s[3] : s[1])];
    }
  }
  // Two-arc components: the numbering alone cannot orient an overstrand.
  // Take the transition not used elsewhere; if both are free (the component
  // is the overstrand at both of its crossings) the lower label leaves the
  // first-listed crossing.
  for (int x = 0; x < c; ++x) {
    if (sign[static_cast<std::size_t>(x)] != 0) continue;
    const auto& s = xs[static_cast<std::size_t>(x)];
    const auto r = root(s[1]);
    const int l = lo[r];
    const int h = hi[r];
    const bool from_l_free = used[static_cast<std::size_t>(l)] == 0;  // l -> h
    const bool from_h_free = used[static_cast<std::size_t>(h)] == 0;  // h -> l
    int source = 0;
    if (from_l_free && from_h_free) {
      source = h;  // lower label is outgoing here
    } else if (from_h_free) {
      source = h;
    } else if (from_l_free) {
      source = l;
    } else {
      throw ParseError("cannot orient overstrand of " + crossing_text(s));
    }
    ++used[static_cast<std::size_t>(source)];
    sign[static_cast<std::size_t>(x)] = (s[3] == source) ? 1 : -1;
  }
  for (int a = 1; a <= n_arcs; ++a) {
    if (used[static_cast<std::size_t>(a)] != 1) {
      throw ParseError("arc " + std::to_string(a) +
                       " is not followed by exactly one strand pass; orientation inconsistent");
    }
  }
  return sign;
}

// Renumbers arcs so that each component is consecutive along its
// orientation. Components are seeded by the earliest outgoing slot in
// crossing order, which also satisfies the two-arc tie rule above.
std::vector<Crossing> canonical_relabel(const std::vector<Crossing>& xs) {
  std::unordered_map<int, SlotRef> head;
  std::unordered_map<int, int> count;
  for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
    const auto& cr = xs[static_cast<std::size_t>(x)];
    for (int s = 0; s < 4; ++s) {
      const int a = cr.slots[static_cast<std::size_t>(s)];
      ++count[a];
      if (cr.is_incoming(s)) {
        if (head.count(a)) throw ParseError("arc " + std::to_string(a) + " enters two crossings");
        head[a] = {x, s};
      }
    }
  }
  for (const auto& [a, k] : count) {
    if (k != 2) throw ParseError("arc " + std::to_string(a) + " appears " + std::to_string(k) + " times");
    if (!head.count(a)) throw ParseError("arc " + std::to_string(a) + " never enters a crossing");
  }
  std::unordered_map<int, int> label;
  int next_label = 1;
  for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
    const auto& cr = xs[static_cast<std::size_t>(x)];
    for (int s = 0; s < 4; ++s) {
      if (cr.is_incoming(s)) continue;
      const int start = cr.slots[static_cast<std::size_t>(s)];
      if (label.count(start)) continue;
      int cur = start;
      do {
        label[cur] = next_label++;
        const SlotRef h = head.at(cur);
        const auto& hc = xs[static_cast<std::size_t>(h.crossing)];
        cur = hc.slots[static_cast<std::size_t>(hc.exit_slot(h.slot))];
      } while (cur != start && !label.count(cur));
      if (cur != start) throw ParseError("strand traversal does not close up");
    }
  }
  std::vector<Crossing> out = xs;
  for (auto& cr : out) {
    for (auto& a : cr.slots) a = label.at(a);
  }
  return out;
}

}  // namespace

LinkDiagram LinkDiagram::unknot() { return unlink(1); }

LinkDiagram LinkDiagram::unlink(int circles) {
  if (circles < 0) throw std::invalid_argument("unlink: negative circle count");
  LinkDiagram d;
  d.free_circles_ = circles;
  d.component_count_ = circles;
  return d;
}

LinkDiagram LinkDiagram::from_oriented(std::vector<Crossing> crossings, bool relabel) {
  if (crossings.empty()) throw ParseError("from_oriented: no crossings");
  for (const auto& cr : crossings) {
    if (cr.sign != 1 && cr.sign != -1) throw ParseError("crossing sign must be +1 or -1");
  }
  LinkDiagram d;
  if (relabel) {
    d.crossings_ = canonical_relabel(crossings);
  } else {
    std::vector<std::array<int, 4>> slots;
    for (const auto& cr : crossings) slots.push_back(cr.slots);
    const auto signs = derive_signs(slots);
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      if (signs[i] != crossings[i].sign) {
        throw ParseError("crossing " + crossing_text(crossings[i].slots) +
                         " sign disagrees with the label numbering");
      }
    }
    d.crossings_ = std::move(crossings);
  }
  d.index_and_validate();
  return d;
}

SlotRef LinkDiagram::other_end(SlotRef s) const {
  const int a = arc_at(s);
  const SlotRef h = head(a);
  return h == s ? tail(a) : h;
}

int LinkDiagram::positive_crossings() const noexcept {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(),
                                        [](const Crossing& c) { return c.sign > 0; }));
}

int LinkDiagram::negative_crossings() const noexcept {
  return crossing_count() - positive_crossings();
}

void LinkDiagram::index_and_validate() {
  const int c = crossing_count();
  const int n_arcs = arc_count();
  heads_.assign(static_cast<std::size_t>(n_arcs), SlotRef{});
  tails_.assign(static_cast<std::size_t>(n_arcs), SlotRef{});
  for (int x = 0; x < c; ++x) {
    const auto& cr = crossings_[static_cast<std::size_t>(x)];
    for (int s = 0; s < 4; ++s) {
      const int a = cr.slots[static_cast<std::size_t>(s)];
      if (a < 1 || a > n_arcs) throw ParseError("arc label " + std::to_string(a) + " out of range");
      auto& slot = cr.is_incoming(s) ? heads_[static_cast<std::size_t>(a - 1)]
                                     : tails_[static_cast<std::size_t>(a - 1)];
      if (slot.crossing >= 0) {
        throw ParseError("arc " + std::to_string(a) + (cr.is_incoming(s) ? " enters" : " leaves") +
                         " two crossings");
      }
      slot = {x, s};
    }
  }

  // Components, following the orientation.
  arc_component_.assign(static_cast<std::size_t>(n_arcs), -1);
  component_count_ = 0;
  for (int a = 1; a <= n_arcs; ++a) {
    if (arc_component_[static_cast<std::size_t>(a - 1)] >= 0) continue;
    int cur = a;
    do {
      arc_component_[static_cast<std::size_t>(cur - 1)] = component_count_;
      const SlotRef h = head(cur);
      const auto& hc = crossing(h.crossing);
      cur = hc.slots[static_cast<std::size_t>(hc.exit_slot(h.slot))];
    } while (cur != a);
    ++component_count_;
  }

  // Connectivity of the 4-valent graph.
  Dsu dsu(static_cast<std::size_t>(c));
  for (int a = 1; a <= n_arcs; ++a) dsu.unite(head(a).crossing, tail(a).crossing);
  for (int x = 1; x < c; ++x) {
    if (dsu.find(x) != dsu.find(0)) throw ParseError("diagram is disconnected");
  }

  // Faces: from corner (x, j) leave along slot j+1 and land in the corner
  // that starts at the arriving slot.
  corner_face_.assign(static_cast<std::size_t>(4 * c), -1);
  face_count_ = 0;
  for (int start = 0; start < 4 * c; ++start) {
    if (corner_face_[static_cast<std::size_t>(start)] >= 0) continue;
    int cur = start;
    while (corner_face_[static_cast<std::size_t>(cur)] < 0) {
      corner_face_[static_cast<std::size_t>(cur)] = face_count_;
      const SlotRef leave{cur / 4, (cur % 4 + 1) % 4};
      const SlotRef arrive = other_end(leave);
      cur = 4 * arrive.crossing + arrive.slot;
    }
    if (cur != start) throw InvariantViolation("corner walk is not a permutation");
    ++face_count_;
  }
  if (face_count_ != c + 2) {
    throw ParseError("diagram is not planar: " + std::to_string(face_count_) + " faces for " +
                     std::to_string(c) + " crossings (expected " + std::to_string(c + 2) + ")");
  }
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> slots;
  int unknot_tokens = 0;
  std::size_t i = 0;
  auto skip_sep = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto read_int = [&]() -> int {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("malformed token near offset " + std::to_string(start));
    if (i - start > 9) throw ParseError("arc label too large near offset " + std::to_string(start));
    int v = std::stoi(std::string(text.substr(start, i - start)));
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return v;
  };
  auto expect = [&](char ch) {
    if (i >= text.size() || text[i] != ch) {
      throw ParseError(std::string("malformed token: expected '") + ch + "' at offset " + std::to_string(i));
    }
    ++i;
  };
  skip_sep();
  while (i < text.size()) {
    if (text[i] == 'O') {
      ++i;
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',') {
        throw ParseError("malformed token at offset " + std::to_string(i - 1));
      }
      ++unknot_tokens;
    } else if (text[i] == 'X') {
      ++i;
      expect('[');
      std::array<int, 4> s{};
      for (int k = 0; k < 4; ++k) {
        s[static_cast<std::size_t>(k)] = read_int();
        if (k < 3) expect(',');
      }
      expect(']');
      slots.push_back(s);
    } else {
      throw ParseError("malformed token at offset " + std::to_string(i));
    }
    skip_sep();
  }
  if (unknot_tokens > 0) {
    if (unknot_tokens > 1 || !slots.empty()) {
      throw ParseError("diagram is disconnected (crossingless circle next to other components)");
    }
    return LinkDiagram::unknot();
  }
  if (slots.empty()) return {};
  const auto signs = derive_signs(slots);
  std::vector<Crossing> xs;
  xs.reserve(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) xs.push_back({slots[k], signs[k]});
  return LinkDiagram::from_oriented(std::move(xs), false);
}

std::string serialize_pd(const LinkDiagram& d) {
  if (d.crossing_count() == 0) {
    std::string out;
    for (int k = 0; k < d.free_circles(); ++k) out += k ? " O" : "O";
    return out;
  }
  std::string out;
  for (const auto& cr : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += crossing_text(cr.slots);
  }
  return out;
}

int writhe(const LinkDiagram& d) { return d.positive_crossings() - d.negative_crossings(); }

LinkDiagram mirror(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d;
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size());
  for (const auto& cr : d.crossings()) {
    const auto& s = cr.slots;
    Crossing m;
    if (cr.sign > 0) {
      m.slots = {s[3], s[0], s[1], s[2]};
    } else {
      m.slots = {s[1], s[2], s[3], s[0]};
    }
    m.sign = -cr.sign;
    xs.push_back(m);
  }
  return LinkDiagram::from_oriented(std::move(xs), true);
}

SplitDiagram cable(const LinkDiagram& d, const std::vector<int>& mult) {
  if (static_cast<int>(mult.size()) != d.component_count()) {
    throw std::invalid_argument("cable: one multiplicity per component required");
  }
  for (int m : mult) {
    if (m < 0) throw std::invalid_argument("cable: negative multiplicity");
  }
  SplitDiagram out;
  if (d.crossing_count() == 0) {
    for (int m : mult) out.free_circles += m;
    return out;
  }

  const int n_arcs = d.arc_count();
  const int width = std::max(1, *std::max_element(mult.begin(), mult.end()));
  auto copies = [&](int arc) { return mult[static_cast<std::size_t>(d.component_of_arc(arc))]; };
  auto ext = [width](int arc, int copy) { return arc * width + copy; };
  int next_label = (n_arcs + 1) * width;
  std::vector<std::pair<int, int>> glued;  // labels that become one arc

  std::vector<Crossing> xs;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Crossing& cr = d.crossing(x);
    const auto& s = cr.slots;
    const int nu = copies(s[0]);
    const int no = copies(s[1]);
    if (nu == 0 || no == 0) {
      for (int u = 0; u < nu; ++u) glued.emplace_back(ext(s[0], u), ext(s[2], u));
      for (int o = 0; o < no; ++o) glued.emplace_back(ext(s[3], o), ext(s[1], o));
      continue;
    }
    // Local frame: understrand heads north, its copy u sits at column u
    // (west to east = left to right along the understrand). The overstrand
    // heads east when positive (left = north) and west when negative
    // (left = south); `over_copy_at_row` maps a row back to its copy.
    auto over_copy_at_row = [&](int row) { return cr.sign > 0 ? no - 1 - row : row; };
    const int under_base = next_label;
    next_label += nu * (no - 1);
    const int over_base = next_label;
    next_label += no * (nu - 1);
    auto under_seg = [&](int u, int seg) { return under_base + u * (no - 1) + seg; };
    auto over_seg = [&](int o, int seg) { return over_base + o * (nu - 1) + seg; };
    for (int u = 0; u < nu; ++u) {
      for (int row = 0; row < no; ++row) {
        const int o = over_copy_at_row(row);
        Crossing g;
        g.sign = cr.sign;
        g.slots[0] = row == 0 ? ext(s[0], u) : under_seg(u, row - 1);
        g.slots[2] = row == no - 1 ? ext(s[2], u) : under_seg(u, row);
        g.slots[1] = u == nu - 1 ? ext(s[1], o) : over_seg(o, u);
        g.slots[3] = u == 0 ? ext(s[3], o) : over_seg(o, u - 1);
        xs.push_back(g);
      }
    }
  }

  Dsu labels(static_cast<std::size_t>(next_label));
  for (const auto& [a, b] : glued) labels.unite(a, b);
  std::vector<std::uint8_t> used(static_cast<std::size_t>(next_label), 0);
  for (auto& g : xs) {
    for (int& l : g.slots) {
      l = labels.find(l) + 1;
      used[static_cast<std::size_t>(l - 1)] = 1;
    }
  }
  // Circles that lost every crossing.
  std::vector<std::uint8_t> counted(static_cast<std::size_t>(next_label), 0);
  for (int arc = 1; arc <= n_arcs; ++arc) {
    for (int k = 0; k < copies(arc); ++k) {
      const int root = labels.find(ext(arc, k));
      if (used[static_cast<std::size_t>(root)] || counted[static_cast<std::size_t>(root)]) continue;
      counted[static_cast<std::size_t>(root)] = 1;
      ++out.free_circles;
    }
  }

  // Connected pieces: crossings sharing a label.
  Dsu pieces(xs.size());
  std::unordered_map<int, int> first_at;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (int l : xs[i].slots) {
      auto [it, fresh] = first_at.emplace(l, static_cast<int>(i));
      if (!fresh) pieces.unite(static_cast<int>(i), it->second);
    }
  }
  std::map<int, std::vector<Crossing>> by_root;
  for (std::size_t i = 0; i < xs.size(); ++i) by_root[pieces.find(static_cast<int>(i))].push_back(xs[i]);
  for (auto& [root, part] : by_root) out.pieces.push_back(LinkDiagram::from_oriented(std::move(part), true));
  return out;
}

LinkDiagram cable(const LinkDiagram& d, int n) {
  if (n < 1) throw std::invalid_argument("cable: n must be >= 1");
  if (n == 1) return d;
  if (d.crossing_count() == 0) return LinkDiagram::unlink(d.free_circles() * n);
  SplitDiagram s = cable(d, std::vector<int>(static_cast<std::size_t>(d.component_count()), n));
  if (s.pieces.size() != 1 || s.free_circles != 0) throw InvariantViolation("cable of a connected diagram split");
  return std::move(s.pieces.front());
}

LinkDiagram add_kink(const LinkDiagram& d, int arc, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("add_kink: sign must be +1 or -1");
  if (d.crossing_count() == 0) {
    if (d.free_circles() != 1) throw std::invalid_argument("add_kink: needs a connected diagram");
    return sign > 0 ? parse_pd("X[1,1,2,2]") : parse_pd("X[2,1,1,2]");
  }
  if (arc < 1 || arc > d.arc_count()) throw std::invalid_argument("add_kink: no such arc");
  std::vector<Crossing> xs = d.crossings();
  const int a_out = d.arc_count() + 1;
  const int loop = d.arc_count() + 2;
  const SlotRef h = d.head(arc);
  xs[static_cast<std::size_t>(h.crossing)].slots[static_cast<std::size_t>(h.slot)] = a_out;
  if (sign > 0) {
    xs.push_back({{loop, loop, a_out, arc}, 1});
  } else {
    xs.push_back({{arc, loop, loop, a_out}, -1});
  }
  return LinkDiagram::from_oriented(std::move(xs), true);
}

}  // namespace jonesdeg
