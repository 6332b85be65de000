#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qpb/errors.hpp"
#include "qpb/qrational.hpp"

namespace qpb {

/// Power series in one formal variable, truncated at a fixed order N
/// (coefficients 0..N are meaningful, nothing above is ever reported).
///
/// `Coeff` is either `Rational` (runs at a numeric q) or `QRational`
/// (symbolic q). Both provide field arithmetic and construction from long.
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, Coeff(0)) {}
  TruncatedSeries(int order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<size_t>(order) + 1, Coeff(0));
  }

  static TruncatedSeries constant(int order, const Coeff& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  /// The series of the variable itself.
  static TruncatedSeries variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = Coeff(1);
    return s;
  }
  /// exp(scale * x), coefficients scale^n / n!.
  static TruncatedSeries exponential(int order, const Coeff& scale) {
    TruncatedSeries s(order);
    Coeff term(1);
    for (int n = 0; n <= order; ++n) {
      s.coeffs_[static_cast<size_t>(n)] = term;
      term = term * scale / Coeff(n + 1);
    }
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& operator[](int n) const { return coeffs_.at(static_cast<size_t>(n)); }
  Coeff& operator[](int n) { return coeffs_.at(static_cast<size_t>(n)); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or nullopt when zero to the order.
  std::optional<int> valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!(coeffs_[static_cast<size_t>(n)] == Coeff(0))) return n;
    return std::nullopt;
  }

  TruncatedSeries truncated(int order) const {
    std::vector<Coeff> v(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    return TruncatedSeries(order, std::move(v));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (a[i] == Coeff(0)) continue;
      for (int j = 0; i + j <= n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
  }
  friend TruncatedSeries operator*(const Coeff& c, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = c * a[i];
    return r;
  }

  /// Multiplicative inverse; the constant term must be nonzero.
  TruncatedSeries inverse() const {
    if (coeffs_[0] == Coeff(0)) throw DivisionUndefined("series with zero constant term is not invertible");
    TruncatedSeries r(order());
    const Coeff inv0 = Coeff(1) / coeffs_[0];
    r[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      Coeff acc(0);
      for (int k = 1; k <= n; ++k) acc = acc + (*this)[k] * r[n - k];
      r[n] = Coeff(0) - acc * inv0;
    }
    return r;
  }

  /// f(g) for g with zero constant term, truncated at min(order(f), order(g)).
  TruncatedSeries compose(const TruncatedSeries& g) const {
    if (!(g[0] == Coeff(0))) throw DivisionUndefined("composition needs an inner series with zero constant term");
    const int n = std::min(order(), g.order());
    TruncatedSeries r = constant(n, (*this)[n]);
    const TruncatedSeries inner = g.truncated(n);
    for (int k = n - 1; k >= 0; --k) {
      r = r * inner;
      r[0] = r[0] + (*this)[k];
    }
    return r;
  }

 private:
  std::vector<Coeff> coeffs_;
};

/// numerator / denominator after cancelling the common power of the variable
/// given by the denominator's valuation v. The result has order
/// min(order) - v. Throws DivisionUndefined when the denominator is zero to
/// the truncation order or the numerator does not vanish to order v.
template <class Coeff>
TruncatedSeries<Coeff> series_compose_div(const TruncatedSeries<Coeff>& numerator,
                                          const TruncatedSeries<Coeff>& denominator) {
  const int n = std::min(numerator.order(), denominator.order());
  const auto v = denominator.truncated(n).valuation();
  if (!v) throw DivisionUndefined("denominator is zero to the truncation order");
  for (int i = 0; i < *v; ++i)
    if (!(numerator[i] == Coeff(0))) throw DivisionUndefined("numerator does not share the denominator's zero");
  const int m = n - *v;
  TruncatedSeries<Coeff> num(m);
  TruncatedSeries<Coeff> den(m);
  for (int i = 0; i <= m; ++i) {
    num[i] = numerator[i + *v];
    den[i] = denominator[i + *v];
  }
  return num * den.inverse();
}

using RationalSeries = TruncatedSeries<Rational>;
using QSeries = TruncatedSeries<QRational>;

}  // namespace qpb
