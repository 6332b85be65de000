#include "qpb/qrational.hpp"

#include "qpb/errors.hpp"

namespace qpb {

QRational::QRational(const Rational& c) : num_(c.get_num()), den_(c.get_den()) {}

QRational::QRational(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionUndefined("zero denominator");
  normalize();
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  // q^e is a unit: move the denominator's monomial factor into the numerator.
  num_ = num_.shifted(-den_.min_exp());
  den_ = den_.shifted(-den_.min_exp());
  const QPoly g = QPoly::gcd(num_, den_);
  if (g != QPoly(1)) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QPoly QRational::to_laurent() const {
  if (!is_laurent()) throw NotPolynomial(to_string());
  return num_;
}

QRational operator+(const QRational& a, const QRational& b) {
  if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
  return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator*(const QRational& a, const QRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_laurent() && b.is_laurent()) return QRational(a.num_ * b.num_, QPoly(1), QRational::Normalized{});
  return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) {
  if (b.is_zero()) throw DivisionUndefined("division by zero rational function");
  return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

QRational QRational::pow(long e) const {
  if (e >= 0) return QRational(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Normalized{});
  if (is_zero()) throw DivisionUndefined("zero to a negative power");
  return QRational(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
}

Rational QRational::evaluate(const Rational& c) const {
  const Rational d = den_.evaluate(c);
  if (d == 0) throw DivisionUndefined("denominator vanishes at q = " + c.get_str());
  Rational r = num_.evaluate(c) / d;
  r.canonicalize();
  return r;
}

std::string QRational::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRational from_rational_coeffs(int min_exp, const std::vector<Rational>& coeffs) {
  BigInt l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Rational scaled = c * Rational(l);
    ints.push_back(scaled.get_num());
  }
  return QRational(QPoly(min_exp, std::move(ints)), QPoly(l));
}

}  // namespace qpb
