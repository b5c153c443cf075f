#pragma once

// Reference computations for the tests. Nothing here uses the library:
// PD text is decoded independently and polynomials are plain maps.

#include <array>
#include <map>
#include <string>
#include <vector>

namespace oracle {

/// exponent -> coefficient, zero coefficients removed.
using Poly = std::map<int, long long>;

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, long long c);
Poly shift(const Poly& a, int k);
std::string render(const Poly& p, const std::string& var = "A");

struct RawDiagram {
  std::vector<std::array<int, 4>> crossings;
  /// +1 / -1 per crossing, decided by propagating head/tail marks along arcs.
  std::vector<int> signs;
  int writhe = 0;
};

/// Accepts `X[a,b,c,d]` tokens only.
RawDiagram decode(const std::string& pd);

/// Circles of the state with B-smoothings on the bits of b_mask. A joins
/// slots 0-1 and 2-3, B joins 0-3 and 1-2.
int state_circles(const RawDiagram& d, unsigned long long b_mask);

/// Bracket by brute force over all states: A^(#A - #B) delta^(circles - 1).
Poly bracket(const RawDiagram& d);

/// Classical Jones polynomial in t = A^-4 from (-A^3)^(-w) ⟨D⟩. Keys are
/// exponents of t.
Poly jones_t(const RawDiagram& d);

/// Colored Jones of the figure-eight knot, color N (N = 2 is the Jones
/// polynomial), from the cyclotomic sum
///   sum_{k=0}^{N-1} prod_{j=1}^{k} {N+j}{N-j},   {a} = q^(a/2) - q^(-a/2).
/// Keys are exponents of q.
Poly figure_eight_colored(int N);

/// Colored Jones of the right-handed trefoil from
///   sum_{k=0}^{N-1} (-1)^k q^(k(k+3)/2) prod_{j=1}^{k} {N+j}{N-j}.
Poly right_trefoil_colored(int N);

/// q -> q^-1.
Poly invert(const Poly& p);

}  // namespace oracle
