#include "oracle.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace oracle {

Poly add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b) {
    out[e] += c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [e1, c1] : a) {
    for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly scale(const Poly& a, long long c) {
  Poly out;
  if (c == 0) return out;
  for (const auto& [e, v] : a) out[e] = v * c;
  return out;
}

Poly shift(const Poly& a, int k) {
  Poly out;
  for (const auto& [e, v] : a) out[e + k] = v;
  return out;
}

Poly invert(const Poly& p) {
  Poly out;
  for (const auto& [e, v] : p) out[-e] = v;
  return out;
}

std::string render(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    long long c = it->second;
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
    } else if (c < 0) {
      s += "-";
    }
    if (c < 0) c = -c;
    if (it->first == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += var;
    if (it->first != 1) s += "^" + std::to_string(it->first);
  }
  return s;
}

namespace {

// Number of distinct arcs on the component through `arc`.
int component_arcs(const std::vector<std::array<int, 4>>& xs, int arc) {
  std::map<int, int> seen{{arc, 1}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& c : xs) {
      for (int p = 0; p < 2; ++p) {
        const int a = c[static_cast<std::size_t>(p)];
        const int b = c[static_cast<std::size_t>(p + 2)];
        if (seen.count(a) != seen.count(b)) {
          seen[a] = seen[b] = 1;
          grew = true;
        }
      }
    }
  }
  return static_cast<int>(seen.size());
}

}  // namespace

RawDiagram decode(const std::string& pd) {
  RawDiagram d;
  static const std::regex token(R"(X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\])");
  for (auto it = std::sregex_iterator(pd.begin(), pd.end(), token); it != std::sregex_iterator(); ++it) {
    d.crossings.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
  }
  const int n = static_cast<int>(d.crossings.size());
  // role[x][s]: +1 the strand enters at this slot, -1 it leaves, 0 unknown.
  std::vector<std::array<int, 4>> role(static_cast<std::size_t>(n), {1, 0, -1, 0});
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) where[d.crossings[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]].push_back({x, s});
  }
  for (const auto& [arc, ends] : where) {
    if (ends.size() != 2) throw std::runtime_error("oracle: arc " + std::to_string(arc) + " not used twice");
  }
  auto set_role = [&](int x, int s, int r, bool& changed) {
    int& cur = role[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)];
    if (cur == 0) {
      cur = r;
      changed = true;
    } else if (cur != r) {
      throw std::runtime_error("oracle: inconsistent orientation");
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [arc, ends] : where) {
      const auto [x0, s0] = ends[0];
      const auto [x1, s1] = ends[1];
      const int r0 = role[static_cast<std::size_t>(x0)][static_cast<std::size_t>(s0)];
      const int r1 = role[static_cast<std::size_t>(x1)][static_cast<std::size_t>(s1)];
      if (r0 != 0) set_role(x1, s1, -r0, changed);
      if (r1 != 0) set_role(x0, s0, -r1, changed);
    }
    for (int x = 0; x < n; ++x) {
      auto& r = role[static_cast<std::size_t>(x)];
      if (r[1] != 0 && r[3] == 0) set_role(x, 3, -r[1], changed);
      if (r[3] != 0 && r[1] == 0) set_role(x, 1, -r[3], changed);
    }
    if (!changed) {
      // Only over-strand components are left. Labels go up along a
      // component and wrap at its end; with two arcs the lower label
      // leaves the first crossing listed.
      for (int x = 0; x < n; ++x) {
        auto& r = role[static_cast<std::size_t>(x)];
        if (r[1] != 0) continue;
        const auto& c = d.crossings[static_cast<std::size_t>(x)];
        const int lo = std::min(c[1], c[3]);
        const int hi = std::max(c[1], c[3]);
        const int arcs = component_arcs(d.crossings, c[1]);
        const bool lo_enters = arcs != 2 && hi == lo + 1;
        const bool slot1_enters = (c[1] == lo) == lo_enters;
        set_role(x, 1, slot1_enters ? 1 : -1, changed);
        break;
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    const int s = role[static_cast<std::size_t>(x)][3] == 1 ? 1 : -1;
    d.signs.push_back(s);
    d.writhe += s;
  }
  return d;
}

namespace {

int find(std::vector<int>& p, int x) {
  while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
  return x;
}

Poly delta() { return {{2, -1}, {-2, -1}}; }

Poly delta_pow(int k) {
  Poly out{{0, 1}};
  for (int i = 0; i < k; ++i) out = mul(out, delta());
  return out;
}

// {a}{b} with exponents doubled (keys are exponents of q^(1/2)).
Poly bracket_pair(int a, int b) {
  Poly x{{a, 1}, {-a, -1}};
  Poly y{{b, 1}, {-b, -1}};
  return mul(x, y);
}

Poly halve(const Poly& p) {
  Poly out;
  for (const auto& [e, c] : p) {
    if (e % 2 != 0) throw std::runtime_error("oracle: half-integral q exponent");
    out[e / 2] = c;
  }
  return out;
}

Poly cyclotomic_sum(int N, bool trefoil) {
  Poly total;
  for (int k = 0; k < N; ++k) {
    Poly term{{0, 1}};
    for (int j = 1; j <= k; ++j) term = mul(term, bracket_pair(N + j, N - j));
    if (trefoil) {
      term = shift(term, k * (k + 3));  // doubled exponent of q^(k(k+3)/2)
      if (k % 2 != 0) term = scale(term, -1);
    }
    total = add(total, term);
  }
  return halve(total);
}

}  // namespace

int state_circles(const RawDiagram& d, unsigned long long b_mask) {
  const int n = static_cast<int>(d.crossings.size());
  int max_label = 0;
  for (const auto& c : d.crossings) {
    for (int a : c) max_label = std::max(max_label, a);
  }
  std::vector<int> parent(static_cast<std::size_t>(max_label + 1));
  for (int i = 0; i <= max_label; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto join = [&](int a, int b) { parent[static_cast<std::size_t>(find(parent, a))] = find(parent, b); };
  for (int x = 0; x < n; ++x) {
    const auto& c = d.crossings[static_cast<std::size_t>(x)];
    if ((b_mask >> x) & 1) {
      join(c[0], c[3]);
      join(c[1], c[2]);
    } else {
      join(c[0], c[1]);
      join(c[2], c[3]);
    }
  }
  std::map<int, int> roots;
  for (const auto& c : d.crossings) {
    for (int a : c) roots[find(parent, a)] = 1;
  }
  return static_cast<int>(roots.size());
}

Poly bracket(const RawDiagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  std::map<int, std::map<int, long long>> by_circles;  // circles -> (A exponent -> count)
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    const int b = __builtin_popcountll(mask);
    by_circles[state_circles(d, mask)][n - 2 * b] += 1;
  }
  Poly out;
  for (const auto& [k, row] : by_circles) {
    Poly r(row.begin(), row.end());
    out = add(out, mul(r, delta_pow(k - 1)));
  }
  return out;
}

Poly jones_t(const RawDiagram& d) {
  Poly p = shift(bracket(d), -3 * d.writhe);
  if (d.writhe % 2 != 0) p = scale(p, -1);
  Poly t;
  for (const auto& [e, c] : p) {
    if (e % 4 != 0) throw std::runtime_error("oracle: Jones exponent not divisible by 4");
    t[-e / 4] = c;
  }
  return t;
}

Poly figure_eight_colored(int N) { return cyclotomic_sum(N, false); }
Poly right_trefoil_colored(int N) { return cyclotomic_sum(N, true); }

}  // namespace oracle
