#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jonesdeg/bracket.hpp"
#include "jonesdeg/diagram.hpp"
#include "jonesdeg/laurent.hpp"

namespace jonesdeg {

/// S_n(x) = sum of c_m x^m.
struct ChebyshevExpansion {
  int n = 0;
  std::vector<std::pair<int, BigInt>> coeffs;  // (m, c_m), m increasing, c_m != 0
};

/// S_0 = 1, S_1 = x, S_{n+1} = x S_n - S_{n-1}.
ChebyshevExpansion chebyshev(int n);

/// Lazily computed cables of one diagram and their brackets, shared by
/// the colored Jones and adequacy computations.
class CableCache {
 public:
  CableCache(LinkDiagram d, Engine engine = Engine::fast, BracketOptions opt = {});

  const LinkDiagram& diagram() const noexcept { return d_; }
  Engine engine() const noexcept { return engine_; }
  const BracketOptions& options() const noexcept { return opt_; }

  /// D^m; m = 0 gives the empty diagram.
  const LinkDiagram& cable(int m);
  /// Unnormalized bracket of D^m (empty diagram 1, each circle delta).
  const LaurentPoly& unnormalized(int m);
  /// Normalized bracket of D^m, m >= 1.
  LaurentPoly normalized(int m);
  /// Unnormalized bracket of the cable with mult[i] copies of component i.
  /// A split cable is the product of its pieces.
  const LaurentPoly& unnormalized(const std::vector<int>& mult);

 private:
  LinkDiagram d_;
  Engine engine_;
  BracketOptions opt_;
  std::map<int, LinkDiagram> cables_;
  std::map<int, LaurentPoly> unnormalized_;
  std::map<std::vector<int>, LaurentPoly> mixed_;
};

/// Every component decorated by S_n = sum c_m z^m: the sum over one m per
/// component of prod c_m times the unnormalized bracket of that cable.
/// Equals delta * ⟨S_n(D)⟩.
LaurentPoly cabled_bracket_unnormalized(CableCache& cache, int n);
/// ⟨S_n(D)⟩ with ⟨O⟩ = 1; a Laurent polynomial only for some n.
DeltaFraction cabled_bracket(CableCache& cache, int n);

/// (-1)^(n-1) ((-1)^n A^(n^2+2n))^(-w) as a signed monomial.
LaurentPoly framing_factor(int writhe, int n);

/// G_D(n+1, A) = (-1)^(n-1) ((-1)^n A^(n^2+2n))^(-w) ⟨S_n(D)⟩.
DeltaFraction unreduced(CableCache& cache, int n);
DeltaFraction unreduced(const LinkDiagram& d, int n, Engine engine = Engine::fast, const BracketOptions& opt = {});

struct ReducedJones {
  /// The reduced polynomial in A.
  LaurentPoly a_form;
  /// True when every A-exponent is a multiple of 4, so that q_form is set.
  bool in_q = false;
  /// a_form after q := A^-4.
  LaurentPoly q_form;
};

/// Reduced colored Jones polynomial J(n+1, q), normalized to 1 on the
/// unknot: G_D(n+1, A) * (A^4 - A^-4) / (A^(2n+2) - A^(-2n-2)).
/// Throws NotDivisible if the division is not exact.
ReducedJones reduced(CableCache& cache, int n);
ReducedJones reduced(const LinkDiagram& d, int n, Engine engine = Engine::fast, const BracketOptions& opt = {});

}  // namespace jonesdeg
