#include "jonesdeg/bracket.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "jonesdeg/error.hpp"
#include "jonesdeg/states.hpp"

namespace jonesdeg {

std::string_view engine_name(Engine e) noexcept {
  switch (e) {
    case Engine::statesum:
      return "statesum";
    case Engine::subgraph:
      return "subgraph";
    case Engine::fast:
      return "fast";
  }
  return "fast";
}

Engine parse_engine(std::string_view name) {
  if (name == "statesum") return Engine::statesum;
  if (name == "subgraph") return Engine::subgraph;
  if (name == "fast") return Engine::fast;
  throw ParseError("unknown engine '" + std::string(name) + "' (expected statesum, subgraph or fast)");
}

StateTally::StateTally(int crossings, int max_circles)
    : crossings_(crossings),
      max_circles_(max_circles),
      counts_(static_cast<std::size_t>((crossings + 1) * (max_circles + 1)), 0) {}

TallyCount StateTally::get(int a_count, int circles) const {
  if (a_count < 0 || a_count > crossings_ || circles < 0 || circles > max_circles_) return 0;
  return counts_[static_cast<std::size_t>(a_count * (max_circles_ + 1) + circles)];
}

void StateTally::add(int a_count, int circles, TallyCount n) {
  if (a_count < 0 || a_count > crossings_ || circles < 0 || circles > max_circles_) {
    throw InvariantViolation("state tally index out of range (a=" + std::to_string(a_count) +
                             ", circles=" + std::to_string(circles) + ")");
  }
  counts_[static_cast<std::size_t>(a_count * (max_circles_ + 1) + circles)] += n;
}

StateTally& StateTally::operator+=(const StateTally& r) {
  if (r.crossings_ != crossings_ || r.max_circles_ != max_circles_) {
    throw InvariantViolation("adding state tallies of different shapes");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += r.counts_[i];
  return *this;
}

TallyCount StateTally::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), TallyCount{0});
}

namespace {

LaurentPoly tally_poly(const StateTally& t, int circle_offset) {
  LaurentPoly out;
  for (int k = 0; k <= t.max_circles(); ++k) {
    LaurentPoly row;
    for (int a = 0; a <= t.crossings(); ++a) {
      const TallyCount n = t.get(a, k);
      if (n == 0) continue;
      const std::uint64_t words[2] = {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n >> 64)};
      BigInt big;
      mpz_import(big.get_mpz_t(), 2, -1, sizeof words[0], 0, 0, words);
      row.add_term(2 * a - t.crossings(), big);
    }
    if (row.is_zero()) continue;
    const int power = k + circle_offset;
    if (power < 0) throw std::invalid_argument("normalized bracket of the empty diagram is not a Laurent polynomial");
    out += row * delta_power(static_cast<unsigned>(power));
  }
  return out;
}

void check_cap(const LinkDiagram& d, const BracketOptions& opt, const char* engine) {
  const int c = d.crossing_count();
  if (c > opt.cap) {
    throw ResourceLimit(std::string(engine) + " engine refuses " + std::to_string(c) + " crossings (cap " +
                        std::to_string(opt.cap) + ")");
  }
  if (c > 62) throw ResourceLimit(std::string(engine) + " engine supports at most 62 crossings");
}

int tally_circle_bound(const LinkDiagram& d) {
  return d.crossing_count() == 0 ? d.free_circles() : d.crossing_count() + 1;
}

StateTally crossingless_tally(const LinkDiagram& d) {
  StateTally t(0, d.free_circles());
  t.add(0, d.free_circles(), 1);
  return t;
}

template <class Work>
StateTally run_partitioned(const LinkDiagram& d, unsigned workers, std::uint64_t chunks, Work work) {
  const int c = d.crossing_count();
  const int m = tally_circle_bound(d);
  workers = std::max(1u, workers);
  if (workers == 1 || chunks <= 1) {
    StateTally t(c, m);
    for (std::uint64_t k = 0; k < chunks; ++k) work(k, t);
    return t;
  }
  std::vector<StateTally> partial(workers, StateTally(c, m));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t k = w; k < chunks; k += workers) work(k, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  StateTally t(c, m);
  for (const auto& p : partial) t += p;
  return t;
}

int chunk_bits(int c, unsigned workers) {
  if (workers <= 1) return 0;
  const int want = std::bit_width(workers * 4u);
  return std::min(c, want);
}

}  // namespace

LaurentPoly StateTally::bracket() const { return tally_poly(*this, -1); }
LaurentPoly StateTally::unnormalized() const { return tally_poly(*this, 0); }

StateTally tally_statesum(const LinkDiagram& d, const BracketOptions& opt) {
  if (d.crossing_count() == 0) return crossingless_tally(d);
  check_cap(d, opt, "statesum");
  const int c = d.crossing_count();
  const int arcs = d.arc_count();
  const int hi_bits = chunk_bits(c, opt.workers);
  const int lo_bits = c - hi_bits;
  const auto& xs = d.crossings();
  return run_partitioned(d, opt.workers, std::uint64_t{1} << hi_bits, [&](std::uint64_t chunk, StateTally& t) {
    std::vector<int> parent(static_cast<std::size_t>(arcs + 1));
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        auto& p = parent[static_cast<std::size_t>(x)];
        p = parent[static_cast<std::size_t>(p)];
        x = p;
      }
      return x;
    };
    const std::uint64_t lo_count = std::uint64_t{1} << lo_bits;
    for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
      const std::uint64_t b_mask = (chunk << lo_bits) | lo;
      std::iota(parent.begin(), parent.end(), 0);
      int circles = arcs;
      auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[static_cast<std::size_t>(a)] = b;
          --circles;
        }
      };
      for (int x = 0; x < c; ++x) {
        const auto& s = xs[static_cast<std::size_t>(x)].slots;
        if ((b_mask >> x) & 1u) {
          unite(s[3], s[0]);
          unite(s[1], s[2]);
        } else {
          unite(s[0], s[1]);
          unite(s[2], s[3]);
        }
      }
      t.add(c - std::popcount(b_mask), circles, 1);
    }
  });
}

StateTally tally_subgraph(const LinkDiagram& d, const BracketOptions& opt) {
  if (d.crossing_count() > 0) check_cap(d, opt, "subgraph");
  const RibbonGraph g = ribbon_graph_a(d);
  const int e = g.edge_count();
  const int c = d.crossing_count();
  const int hi_bits = chunk_bits(e, opt.workers);
  const int lo_bits = e - hi_bits;
  return run_partitioned(d, opt.workers, std::uint64_t{1} << hi_bits, [&](std::uint64_t chunk, StateTally& t) {
    const std::uint64_t lo_count = std::uint64_t{1} << lo_bits;
    if (!opt.incremental) {
      for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
        const std::uint64_t mask = (chunk << lo_bits) | lo;
        const int f = faces(g, SpanningSubgraph::from_mask(e, mask));
        t.add(c - std::popcount(mask), f, 1);
      }
      return;
    }
    IncrementalFaces inc(g);
    for (int b = 0; b < hi_bits; ++b) {
      if ((chunk >> b) & 1u) inc.toggle(lo_bits + b);
    }
    for (std::uint64_t i = 0; i < lo_count; ++i) {
      if (i > 0) inc.toggle(std::countr_zero(i));
      t.add(c - inc.edge_count(), inc.faces(), 1);
    }
  });
}

StateTally tally(const LinkDiagram& d, Engine e, const BracketOptions& opt) {
  switch (e) {
    case Engine::statesum:
      return tally_statesum(d, opt);
    case Engine::subgraph:
      return tally_subgraph(d, opt);
    case Engine::fast:
      return tally_fast(d, opt);
  }
  return tally_fast(d, opt);
}

LaurentPoly bracket(const LinkDiagram& d, Engine e, const BracketOptions& opt) {
  if (d.is_empty()) throw std::invalid_argument("bracket of the empty diagram");
  return tally(d, e, opt).bracket();
}

LaurentPoly bracket_statesum(const LinkDiagram& d, const BracketOptions& opt) {
  return bracket(d, Engine::statesum, opt);
}
LaurentPoly bracket_subgraph(const LinkDiagram& d, const BracketOptions& opt) {
  return bracket(d, Engine::subgraph, opt);
}
LaurentPoly bracket_fast(const LinkDiagram& d, const BracketOptions& opt) { return bracket(d, Engine::fast, opt); }

LaurentPoly bracket_unnormalized(const LinkDiagram& d, Engine e, const BracketOptions& opt) {
  if (d.is_empty()) return LaurentPoly(1);
  return tally(d, e, opt).unnormalized();
}

ExtremeCoeffs extreme_coeffs(const LaurentPoly& p, int ceiling, int l_max) {
  ExtremeCoeffs out;
  out.ceiling = ceiling;
  int g = 0;
  for (const auto& [e, c] : p.terms()) g = std::gcd(g, ceiling - e);
  out.observed_stride = g == 0 ? 4 : g;
  out.stride_ok = out.observed_stride % 4 == 0;
  for (int l = 0; l <= l_max; ++l) out.coeffs.push_back(p.coeff(ceiling - 4 * l));
  return out;
}

}  // namespace jonesdeg
