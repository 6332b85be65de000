#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpb/bigint.hpp"

namespace qpb {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely from `min_exp()` upward and kept trimmed: the lowest and
/// highest stored coefficients are nonzero, and the zero polynomial has no
/// coefficients and `min_exp() == 0`. Two equal polynomials therefore have
/// identical representations, so `operator==` is structural.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants mix freely
  QPoly(const BigInt& c);  // NOLINT
  QPoly(int min_exp, std::vector<BigInt> coeffs);

  static QPoly monomial(const BigInt& c, int exp);
  static QPoly q_power(int exp) { return monomial(1, exp); }
  /// Ascending coefficients starting at q^0.
  static QPoly from_ascending(std::initializer_list<long> coeffs, int min_exp = 0);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  /// Highest exponent; only meaningful for nonzero polynomials.
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  BigInt coeff(int exp) const;
  const BigInt& leading_coeff() const { return coeffs_.back(); }
  bool is_polynomial() const { return is_zero() || min_exp_ >= 0; }
  bool is_constant() const { return is_zero() || (min_exp_ == 0 && coeffs_.size() == 1); }
  bool nonnegative_coeffs() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const BigInt& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& c) { return a *= c; }
  friend QPoly operator*(const BigInt& c, QPoly a) { return a *= c; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  QPoly pow(unsigned e) const;
  /// Multiplies by q^e.
  QPoly shifted(int e) const;

  /// q -> 1/q (exponent e maps to -e).
  QPoly substitute_inverse() const;
  /// q -> -q.
  QPoly substitute_negate() const;
  /// Exact value at q = c. Throws SubstituteAtPole for c = 0 with negative exponents.
  Rational evaluate(const Rational& c) const;
  BigInt evaluate_at_one() const;

  /// Exact quotient; throws InexactDivision when `d` does not divide `*this`
  /// in Z[q, 1/q], DivisionUndefined when `d` is zero.
  QPoly exact_div(const QPoly& d) const;
  QPoly exact_div(const BigInt& d) const;

  /// Integer gcd of the coefficients (nonnegative).
  BigInt content() const;

  /// Canonical gcd in Z[q]: the factor q^e is ignored (monomials are units in
  /// the Laurent ring), result has min_exp 0 and positive leading coefficient.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  /// Ascending, human-readable, e.g. "1 + 3q + 5q^2" or "q^-1 - 2".
  std::string to_string() const;

 private:
  void trim();

  int min_exp_ = 0;
  std::vector<BigInt> coeffs_;
};

}  // namespace qpb
