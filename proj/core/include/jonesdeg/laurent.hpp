#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jonesdeg {

using BigInt = mpz_class;

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients
/// in a single variable (A on the bracket side, q after substitution).
///
/// Invariant: no stored coefficient is zero. The zero polynomial has no
/// terms and no degrees.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  /// Constant polynomial.
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const BigInt& coeff, int exponent);
  static LaurentPoly from_terms(const std::vector<std::pair<int, long>>& terms);

  /// The loop value -A^2 - A^-2.
  static LaurentPoly delta();

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient at exponent e (0 when absent).
  BigInt coeff(int e) const;
  /// Throws std::domain_error on the zero polynomial.
  int max_degree() const;
  int min_degree() const;
  /// Coefficient at max_degree(); throws on zero.
  const BigInt& leading() const;
  const BigInt& trailing() const;

  /// Adds c*A^e in place, dropping the term if it cancels.
  void add_term(int e, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);
  LaurentPoly& operator*=(const BigInt& c);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& r) { return p += r; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& r) { return p -= r; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);
  friend LaurentPoly operator*(LaurentPoly p, const BigInt& c) { return p *= c; }
  friend LaurentPoly operator*(const BigInt& c, LaurentPoly p) { return p *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// p^k for k >= 0.
  LaurentPoly pow(unsigned k) const;
  /// Multiplication by A^k.
  LaurentPoly shifted(int k) const;
  /// A -> A^-1.
  LaurentPoly inverted() const;

  /// Canonical text: terms by decreasing exponent, e.g. `-A^6 - 3*A^2 + 1`.
  std::string to_string(std::string_view var = "A") const;

 private:
  Terms terms_;
};

/// Quotient q with p = q * r exactly. Throws NotDivisible on a nonzero
/// remainder and std::domain_error when r is zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& r);

/// Substitutes q := A^-4. Exponent e of A becomes exponent -e/4 of q.
/// Throws NotDivisible naming the first exponent that is not a multiple of 4.
LaurentPoly to_q(const LaurentPoly& p);

/// True when every exponent of p is divisible by 4.
bool is_poly_in_a4(const LaurentPoly& p);

/// Cached powers of -A^2 - A^-2.
const LaurentPoly& delta_power(unsigned k);

/// A rational function numerator / (-A^2 - A^-2). The colored Jones
/// quantities normalized so the crossingless unknot has bracket 1 live
/// here: they are Laurent polynomials only for some colors.
///
/// Degrees and coefficients are those of the expansion in descending
/// powers of A (for top-side queries) or ascending powers (bottom side).
/// Both expansions start at the same extreme term, so max/min degree are
/// well defined for nonzero numerators.
class DeltaFraction {
 public:
  DeltaFraction() = default;
  explicit DeltaFraction(LaurentPoly numerator) : numerator_(std::move(numerator)) {}

  const LaurentPoly& numerator() const noexcept { return numerator_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  int max_degree() const { return numerator_.max_degree() - 2; }
  int min_degree() const { return numerator_.min_degree() + 2; }

  /// Coefficient of A^e in the expansion 1/delta = -A^-2 (1 - A^-4 + A^-8 ...).
  BigInt coeff_descending(int e) const;
  /// Coefficient of A^e in the expansion 1/delta = -A^2 (1 - A^4 + A^8 ...).
  BigInt coeff_ascending(int e) const;

  /// The Laurent polynomial when the division by delta is exact.
  bool is_laurent() const;
  LaurentPoly to_laurent() const;

  std::string to_string(std::string_view var = "A") const;

  friend bool operator==(const DeltaFraction& a, const DeltaFraction& b) {
    return a.numerator_ == b.numerator_;
  }

 private:
  LaurentPoly numerator_;
};

/// Exact big-integer to decimal string.
std::string to_decimal(const BigInt& v);

}  // namespace jonesdeg
