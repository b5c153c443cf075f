#include "jonesdeg/laurent.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "jonesdeg/error.hpp"

namespace jonesdeg {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, long>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, BigInt(c));
  return p;
}

LaurentPoly LaurentPoly::delta() { return from_terms({{2, -1}, {-2, -1}}); }

BigInt LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("max_degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("min_degree of the zero polynomial");
  return terms_.begin()->first;
}

const BigInt& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

const BigInt& LaurentPoly::trailing() const {
  if (terms_.empty()) throw std::domain_error("trailing coefficient of the zero polynomial");
  return terms_.begin()->second;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
  LaurentPoly out;
  BigInt prod;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : r.terms_) {
      prod = c1 * c2;
      out.add_term(e1 + e2, prod);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
  *this = *this * r;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    BigInt mag = abs(it->second);
    const bool negative = sgn(it->second) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += var;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& r) {
  if (r.is_zero()) throw std::domain_error("exact_div by the zero polynomial");
  if (p.is_zero()) return {};
  const int rmax = r.max_degree();
  const int qmin = p.min_degree() - r.min_degree();
  const BigInt& rlead = r.leading();
  LaurentPoly rem = p;
  LaurentPoly quot;
  BigInt t;
  while (!rem.is_zero()) {
    const int k = rem.max_degree() - rmax;
    if (k < qmin) break;
    if (!mpz_divisible_p(rem.leading().get_mpz_t(), rlead.get_mpz_t())) break;
    mpz_divexact(t.get_mpz_t(), rem.leading().get_mpz_t(), rlead.get_mpz_t());
    quot.add_term(k, t);
    rem -= r.shifted(k) * t;
  }
  if (!rem.is_zero()) {
    throw NotDivisible("exact_div: nonzero remainder dividing (" + p.to_string() + ") by (" +
                       r.to_string() + ")");
  }
  return quot;
}

bool is_poly_in_a4(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e % 4 != 0) return false;
  }
  return true;
}

LaurentPoly to_q(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e % 4 != 0) {
      throw NotDivisible("to_q: not a polynomial in A^4 (exponent " + std::to_string(e) + ")");
    }
    out.add_term(-e / 4, c);
  }
  return out;
}

const LaurentPoly& delta_power(unsigned k) {
  static std::mutex mu;
  static std::deque<LaurentPoly> cache{LaurentPoly(1)};
  std::lock_guard lock(mu);
  while (cache.size() <= k) cache.push_back(cache.back() * LaurentPoly::delta());
  return cache[k];
}

// 1/delta = -A^-2 * sum_k (-1)^k A^-4k, so the coefficient at e collects
// numerator terms at e + 2 + 4k.
BigInt DeltaFraction::coeff_descending(int e) const {
  BigInt acc = 0;
  if (numerator_.is_zero()) return acc;
  const int top = numerator_.max_degree();
  for (int k = 0; e + 2 + 4 * k <= top; ++k) {
    BigInt c = numerator_.coeff(e + 2 + 4 * k);
    if (k % 2 == 0) {
      acc -= c;
    } else {
      acc += c;
    }
  }
  return acc;
}

BigInt DeltaFraction::coeff_ascending(int e) const {
  BigInt acc = 0;
  if (numerator_.is_zero()) return acc;
  const int bottom = numerator_.min_degree();
  for (int k = 0; e - 2 - 4 * k >= bottom; ++k) {
    BigInt c = numerator_.coeff(e - 2 - 4 * k);
    if (k % 2 == 0) {
      acc -= c;
    } else {
      acc += c;
    }
  }
  return acc;
}

bool DeltaFraction::is_laurent() const {
  try {
    (void)exact_div(numerator_, LaurentPoly::delta());
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

LaurentPoly DeltaFraction::to_laurent() const { return exact_div(numerator_, LaurentPoly::delta()); }

std::string DeltaFraction::to_string(std::string_view var) const {
  if (is_laurent()) return to_laurent().to_string(var);
  std::string d = "(-";
  d += var;
  d += "^2 - ";
  d += var;
  d += "^-2)";
  return "(" + numerator_.to_string(var) + ") / " + d;
}

std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace jonesdeg
