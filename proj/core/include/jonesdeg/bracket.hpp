#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jonesdeg/diagram.hpp"
#include "jonesdeg/laurent.hpp"

namespace jonesdeg {

enum class Engine { statesum, subgraph, fast };

std::string_view engine_name(Engine e) noexcept;
/// Throws ParseError on an unknown name.
Engine parse_engine(std::string_view name);

struct BracketOptions {
  /// Largest crossing count the exhaustive engines accept.
  int cap = 28;
  unsigned workers = 1;
  /// Subgraph engine: Gray-code face updates instead of a fresh trace per subset.
  bool incremental = true;
  /// Sweep engine: bound on (boundary matchings x table cells) held at once.
  std::uint64_t sweep_cell_budget = std::uint64_t{1} << 25;
};

/// State counts reach 2^c, so 128 bits cover every diagram the sweep accepts.
__extension__ typedef unsigned __int128 TallyCount;

/// Number of states with a given count of A-smoothings and circles.
/// Every engine produces one; equal tallies give equal brackets.
class StateTally {
 public:
  StateTally() = default;
  StateTally(int crossings, int max_circles);

  int crossings() const noexcept { return crossings_; }
  int max_circles() const noexcept { return max_circles_; }
  TallyCount get(int a_count, int circles) const;
  void add(int a_count, int circles, TallyCount n);
  StateTally& operator+=(const StateTally& r);
  TallyCount total() const;

  /// sum count * A^(2a - c) * delta^(circles - 1); ⟨O⟩ = 1.
  LaurentPoly bracket() const;
  /// sum count * A^(2a - c) * delta^circles; the empty diagram gives 1.
  LaurentPoly unnormalized() const;

  friend bool operator==(const StateTally&, const StateTally&) = default;

 private:
  int crossings_ = 0;
  int max_circles_ = 0;
  std::vector<TallyCount> counts_;
};

StateTally tally_statesum(const LinkDiagram& d, const BracketOptions& opt = {});
StateTally tally_subgraph(const LinkDiagram& d, const BracketOptions& opt = {});
/// Boundary sweep: crossings are absorbed one at a time while the states of
/// the processed part are grouped by how they connect the open arc ends.
/// Throws ResourceLimit (with a progress note) past the cell budget.
StateTally tally_fast(const LinkDiagram& d, const BracketOptions& opt = {});

StateTally tally(const LinkDiagram& d, Engine e, const BracketOptions& opt = {});

/// Normalized bracket, ⟨O⟩ = 1. Requires a nonempty diagram.
LaurentPoly bracket(const LinkDiagram& d, Engine e = Engine::fast, const BracketOptions& opt = {});
LaurentPoly bracket_statesum(const LinkDiagram& d, const BracketOptions& opt = {});
LaurentPoly bracket_subgraph(const LinkDiagram& d, const BracketOptions& opt = {});
LaurentPoly bracket_fast(const LinkDiagram& d, const BracketOptions& opt = {});

/// Bracket with the empty diagram valued 1 and each circle valued delta.
LaurentPoly bracket_unnormalized(const LinkDiagram& d, Engine e = Engine::fast, const BracketOptions& opt = {});

/// Coefficients read downward from a ceiling exponent M in steps of 4.
struct ExtremeCoeffs {
  int ceiling = 0;
  /// coeffs[l] is the coefficient of A^(ceiling - 4l).
  std::vector<BigInt> coeffs;
  /// gcd of the exponent offsets from the ceiling; 4 unless something is off.
  int observed_stride = 4;
  bool stride_ok = true;
};

ExtremeCoeffs extreme_coeffs(const LaurentPoly& p, int ceiling, int l_max);

}  // namespace jonesdeg
