#pragma once

#include <string>

#include "qpb/qpoly.hpp"

namespace qpb {

/// Ratio of two Laurent polynomials, kept in a unique normal form:
/// the denominator has min_exp 0 and a positive leading coefficient, and
/// numerator and denominator share no nonunit factor in Z[q] (so the integer
/// contents are coprime too). Zero is 0/1.
class QRational {
 public:
  QRational() : den_(1) {}
  QRational(long c) : num_(c), den_(1) {}  // NOLINT
  QRational(const BigInt& c) : num_(c), den_(1) {}  // NOLINT
  QRational(const Rational& c);  // NOLINT
  QRational(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  QRational(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Z[q, 1/q].
  bool is_laurent() const { return den_ == QPoly(1); }
  /// Laurent polynomial value; throws NotPolynomial otherwise.
  QPoly to_laurent() const;

  QRational operator-() const { return QRational(-num_, den_, Normalized{}); }
  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }
  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational& operator/=(const QRational& o) { return *this = *this / o; }
  friend bool operator==(const QRational&, const QRational&) = default;

  QRational pow(long e) const;
  QRational substitute_inverse() const { return QRational(num_.substitute_inverse(), den_.substitute_inverse()); }
  QRational substitute_negate() const { return QRational(num_.substitute_negate(), den_.substitute_negate()); }
  /// Exact value at q = c; throws DivisionUndefined if the denominator vanishes there.
  Rational evaluate(const Rational& c) const;

  std::string to_string() const;

 private:
  struct Normalized {};
  QRational(QPoly num, QPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QPoly num_;
  QPoly den_;
};

/// Builds a QRational from a polynomial with rational coefficients
/// sum_i coeffs[i] q^(min_exp + i).
QRational from_rational_coeffs(int min_exp, const std::vector<Rational>& coeffs);

}  // namespace qpb
