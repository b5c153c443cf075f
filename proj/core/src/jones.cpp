#include "jonesdeg/jones.hpp"

#include <algorithm>
#include <stdexcept>

#include "jonesdeg/error.hpp"

namespace jonesdeg {

ChebyshevExpansion chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev: n must be >= 0");
  // Coefficient vectors indexed by power of x.
  std::vector<BigInt> prev{1};
  std::vector<BigInt> cur{0, 1};
  if (n == 0) {
    cur = prev;
  } else {
    for (int k = 1; k < n; ++k) {
      std::vector<BigInt> nxt(cur.size() + 1, 0);
      for (std::size_t i = 0; i < cur.size(); ++i) nxt[i + 1] += cur[i];
      for (std::size_t i = 0; i < prev.size(); ++i) nxt[i] -= prev[i];
      prev = std::move(cur);
      cur = std::move(nxt);
    }
  }
  ChebyshevExpansion out;
  out.n = n;
  for (std::size_t m = 0; m < cur.size(); ++m) {
    if (cur[m] != 0) out.coeffs.emplace_back(static_cast<int>(m), cur[m]);
  }
  return out;
}

CableCache::CableCache(LinkDiagram d, Engine engine, BracketOptions opt)
    : d_(std::move(d)), engine_(engine), opt_(opt) {}

const LinkDiagram& CableCache::cable(int m) {
  if (m < 0) throw std::invalid_argument("cable index must be >= 0");
  auto it = cables_.find(m);
  if (it == cables_.end()) {
    it = cables_.emplace(m, m == 0 ? LinkDiagram() : jonesdeg::cable(d_, m)).first;
  }
  return it->second;
}

const LaurentPoly& CableCache::unnormalized(int m) {
  auto it = unnormalized_.find(m);
  if (it == unnormalized_.end()) {
    it = unnormalized_.emplace(m, bracket_unnormalized(cable(m), engine_, opt_)).first;
  }
  return it->second;
}

LaurentPoly CableCache::normalized(int m) {
  if (m < 1) throw std::invalid_argument("normalized bracket needs m >= 1");
  return exact_div(unnormalized(m), LaurentPoly::delta());
}

const LaurentPoly& CableCache::unnormalized(const std::vector<int>& mult) {
  if (static_cast<int>(mult.size()) != d_.component_count()) {
    throw std::invalid_argument("one cable multiplicity per component required");
  }
  if (std::all_of(mult.begin(), mult.end(), [&](int m) { return m == mult.front(); })) {
    return mult.empty() ? unnormalized(0) : unnormalized(mult.front());
  }
  auto it = mixed_.find(mult);
  if (it == mixed_.end()) {
    const SplitDiagram s = jonesdeg::cable(d_, mult);
    LaurentPoly p = delta_power(static_cast<unsigned>(s.free_circles));
    for (const auto& piece : s.pieces) p *= bracket_unnormalized(piece, engine_, opt_);
    it = mixed_.emplace(mult, std::move(p)).first;
  }
  return it->second;
}

LaurentPoly cabled_bracket_unnormalized(CableCache& cache, int n) {
  if (n < 1) throw std::invalid_argument("cabled bracket needs n >= 1");
  const auto terms = chebyshev(n).coeffs;
  const std::size_t k = static_cast<std::size_t>(cache.diagram().component_count());
  // Odometer over one Chebyshev term per component.
  std::vector<std::size_t> pick(k, 0);
  std::vector<int> mult(k);
  LaurentPoly sum;
  while (true) {
    BigInt coeff = 1;
    for (std::size_t i = 0; i < k; ++i) {
      mult[i] = terms[pick[i]].first;
      coeff *= terms[pick[i]].second;
    }
    sum += cache.unnormalized(mult) * coeff;
    std::size_t i = 0;
    while (i < k && ++pick[i] == terms.size()) pick[i++] = 0;
    if (i == k) break;
  }
  return sum;
}

DeltaFraction cabled_bracket(CableCache& cache, int n) { return DeltaFraction(cabled_bracket_unnormalized(cache, n)); }

LaurentPoly framing_factor(int writhe, int n) {
  const long exponent = -static_cast<long>(writhe) * (static_cast<long>(n) * n + 2L * n);
  const bool negative = ((static_cast<long>(n) * writhe) % 2 != 0) != ((n - 1) % 2 != 0);
  return LaurentPoly::monomial(BigInt(negative ? -1 : 1), static_cast<int>(exponent));
}

DeltaFraction unreduced(CableCache& cache, int n) {
  const LaurentPoly f = framing_factor(writhe(cache.diagram()), n);
  return DeltaFraction(f * cabled_bracket_unnormalized(cache, n));
}

DeltaFraction unreduced(const LinkDiagram& d, int n, Engine engine, const BracketOptions& opt) {
  CableCache cache(d, engine, opt);
  return unreduced(cache, n);
}

ReducedJones reduced(CableCache& cache, int n) {
  if (cache.diagram().is_empty()) throw std::invalid_argument("reduced Jones of the empty diagram");
  // (A^4 - A^-4) / delta = -(A^2 - A^-2), so the delta in G cancels.
  const DeltaFraction g = unreduced(cache, n);
  const LaurentPoly num = -(g.numerator() * LaurentPoly::from_terms({{2, 1}, {-2, -1}}));
  const LaurentPoly den = LaurentPoly::from_terms({{2 * n + 2, 1}, {-2 * n - 2, -1}});
  ReducedJones out;
  out.a_form = exact_div(num, den);
  out.in_q = is_poly_in_a4(out.a_form);
  if (out.in_q) out.q_form = to_q(out.a_form);
  return out;
}

ReducedJones reduced(const LinkDiagram& d, int n, Engine engine, const BracketOptions& opt) {
  CableCache cache(d, engine, opt);
  return reduced(cache, n);
}

}  // namespace jonesdeg
