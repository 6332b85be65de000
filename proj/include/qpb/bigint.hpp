#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qpb {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Binomial coefficient, zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// base^e for any integer e; base must be nonzero when e < 0.
inline Rational pow(const Rational& base, long e) {
  Rational r;
  const unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), m);
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
  Rational r(text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in " + text);
  r.canonicalize();
  return r;
}

}  // namespace qpb
