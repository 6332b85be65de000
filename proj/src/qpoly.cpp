#include "qpb/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qpb/errors.hpp"

namespace qpb {

QPoly::QPoly(long c) : QPoly(BigInt(c)) {}

QPoly::QPoly(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(int min_exp, std::vector<BigInt> coeffs) : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

QPoly QPoly::monomial(const BigInt& c, int exp) { return QPoly(exp, {c}); }

QPoly QPoly::from_ascending(std::initializer_list<long> coeffs, int min_exp) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(min_exp, std::move(v));
}

void QPoly::trim() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

BigInt QPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<size_t>(exp - min_exp_)];
}

bool QPoly::nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_exp_, o.min_exp_);
  const int hi = std::max(max_exp(), o.max_exp());
  std::vector<BigInt> v(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<size_t>(min_exp_ - lo)] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i + static_cast<size_t>(o.min_exp_ - lo)] += o.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(v);
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(a.min_exp_ + b.min_exp_, std::move(v));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const BigInt& c) {
  if (c == 0) return *this = QPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result(1);
  QPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

QPoly QPoly::shifted(int e) const {
  QPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += e;
  return r;
}

QPoly QPoly::substitute_inverse() const {
  if (is_zero()) return {};
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return QPoly(-max_exp(), std::move(v));
}

QPoly QPoly::substitute_negate() const {
  QPoly r = *this;
  for (size_t i = 0; i < r.coeffs_.size(); ++i) {
    const int e = min_exp_ + static_cast<int>(i);
    if (e % 2 != 0) r.coeffs_[i] = -r.coeffs_[i];
  }
  return r;
}

Rational QPoly::evaluate(const Rational& c) const {
  if (is_zero()) return 0;
  if (c == 0) {
    if (min_exp_ < 0) throw SubstituteAtPole("q = 0 in " + to_string());
    return Rational(coeff(0));
  }
  // Horner over the dense block, then scale by c^min_exp.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= c;
    acc += Rational(*it);
  }
  return acc * qpb::pow(c, min_exp_);
}

BigInt QPoly::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPoly QPoly::exact_div(const BigInt& d) const {
  if (d == 0) throw DivisionUndefined("division of " + to_string() + " by 0");
  QPoly r = *this;
  for (auto& c : r.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw InexactDivision(to_string() + " by " + d.get_str());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

QPoly QPoly::exact_div(const QPoly& d) const {
  if (d.is_zero()) throw DivisionUndefined("division of " + to_string() + " by 0");
  if (is_zero()) return {};
  // Long division from the top on the dense blocks; min_exp is handled by a shift.
  std::vector<BigInt> rem = coeffs_;
  const size_t dn = d.coeffs_.size();
  if (rem.size() < dn) throw InexactDivision(to_string() + " by " + d.to_string());
  std::vector<BigInt> quot(rem.size() - dn + 1);
  const BigInt& lead = d.coeffs_.back();
  for (size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw InexactDivision(to_string() + " by " + d.to_string());
    BigInt qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (size_t j = 0; j < dn; ++j) rem[k + j] -= qk * d.coeffs_[j];
    quot[k] = qk;
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
    throw InexactDivision(to_string() + " by " + d.to_string());
  return QPoly(min_exp_ - d.min_exp_, std::move(quot));
}

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

namespace {

// Pseudo-remainder of a by b over Z (both with min_exp 0, b nonzero).
QPoly pseudo_remainder(QPoly a, const QPoly& b) {
  const int db = b.max_exp();
  const BigInt lb = b.leading_coeff();
  while (!a.is_zero() && a.max_exp() >= db) {
    const BigInt la = a.leading_coeff();
    const int shift = a.max_exp() - db;
    a = a * lb - QPoly::monomial(la, shift) * b;
  }
  return a;
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  QPoly r = p.exact_div(p.content());
  if (r.leading_coeff() < 0) r = -r;
  return r;
}

}  // namespace

QPoly QPoly::gcd(const QPoly& a_in, const QPoly& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) return {};
  QPoly a = a_in.shifted(-a_in.min_exp());
  QPoly b = b_in.shifted(-b_in.min_exp());
  if (a.is_zero()) return primitive_part(b) * b.content();
  if (b.is_zero()) return primitive_part(a) * a.content();
  BigInt g;
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.max_exp() < b.max_exp()) std::swap(a, b);
  while (!b.is_zero()) {
    QPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r.shifted(-r.min_exp()));
  }
  return primitive_part(a) * g;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const int e = min_exp_ + static_cast<int>(i);
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str();
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace qpb
