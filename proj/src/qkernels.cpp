#include "qpb/qkernels.hpp"

#include <string>

#include "qpb/errors.hpp"

namespace qpb {

QPoly q_int(int n) {
  if (n < 0) throw IndexOutOfRange("q_int(" + std::to_string(n) + ")");
  return QPoly(0, std::vector<BigInt>(static_cast<size_t>(n), BigInt(1)));
}

QPoly q_factorial(int n) {
  if (n < 0) throw IndexOutOfRange("q_factorial(" + std::to_string(n) + ")");
  QPoly r(1);
  for (int i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

QPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw IndexOutOfRange("q_binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k));
}

BigInt stirling2(int n, int m) {
  if (n < 0 || m < 0 || m > n) return 0;
  if (n == 0) return 1;
  if (m == 0) return 0;
  // Explicit sum: m! S(n,m) = sum_i (-1)^i C(m,i) (m-i)^n.
  BigInt s = 0;
  for (int i = 0; i <= m; ++i) {
    BigInt term = binomial(m, i) * pow(BigInt(m - i), static_cast<unsigned long>(n));
    if (i % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return BigInt(s / factorial(static_cast<unsigned long>(m)));
}

std::string_view to_string(StirlingVariant v) {
  switch (v) {
    case StirlingVariant::carlitz: return "carlitz";
    case StirlingVariant::cigler: return "cigler";
    case StirlingVariant::shifted: return "shifted";
  }
  return "?";
}

QStirlingTable::QStirlingTable(StirlingVariant variant, int max_n) : variant_(variant), max_n_(max_n) {
  if (max_n < 0) throw IndexOutOfRange("negative table bound");
  rows_.resize(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) rows_[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
  rows_[0][0] = QPoly(1);
  auto prev = [this](int n, int m) -> QPoly {
    if (m < 0 || m > n) return {};
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(m)];
  };
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m <= n; ++m) {
      QPoly v;
      switch (variant) {
        case StirlingVariant::carlitz:
          v = prev(n - 1, m - 1) + q_int(m) * prev(n - 1, m);
          break;
        case StirlingVariant::shifted:
          v = (m >= 1 ? prev(n - 1, m - 1).shifted(m - 1) : QPoly()) + q_int(m) * prev(n - 1, m);
          break;
        case StirlingVariant::cigler:
          // Ground set {0..n-1}; element 0 always opens B_0.
          if (n == 1) {
            v = m == 1 ? QPoly(1) : QPoly();
          } else {
            // Element n-1 joins B_0 (weight q^(n-1)), joins one of the other
            // m-1 blocks, or opens a new block.
            v = prev(n - 1, m).shifted(n - 1) + prev(n - 1, m) * BigInt(m - 1) + prev(n - 1, m - 1);
          }
          break;
      }
      rows_[static_cast<size_t>(n)][static_cast<size_t>(m)] = std::move(v);
    }
  }
}

const QPoly& QStirlingTable::operator()(int n, int m) const {
  if (n > max_n_) throw IndexOutOfRange("Stirling table bound " + std::to_string(max_n_) + " exceeded by n=" + std::to_string(n));
  if (n < 0 || m < 0 || m > n) return zero_;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

QPoly q_stirling(StirlingVariant variant, int n, int m) {
  if (n < 0 || m < 0 || m > n) return {};
  return QStirlingTable(variant, n)(n, m);
}

QPoly s2_q(int n, int j) {
  if (n < 0 || j < 0) return {};
  QPoly s;
  for (int k = 0; k <= n; ++k) {
    const BigInt c = binomial(n, k) * stirling2(k, j);
    if (c != 0) s += QPoly::monomial(c, n - k);
  }
  return s;
}

QRational s2_inv_q(int n, int j) {
  if (j < 0) throw IndexOutOfRange("s2_inv_q with negative j");
  // Coefficients of q^-(j+1) .. q^-1.
  std::vector<Rational> coeffs(static_cast<size_t>(j) + 1);
  const Rational inv_jfact = Rational(1) / Rational(factorial(static_cast<unsigned long>(j)));
  for (int l = 0; l <= j; ++l) {
    Rational term = Rational(binomial(j, l)) * pow(Rational(l + 1), n) * inv_jfact;
    if ((j - l) % 2 != 0) term = -term;
    coeffs[static_cast<size_t>(j - l)] = term;
  }
  return from_rational_coeffs(-(j + 1), coeffs);
}

QSeries q_exponential(const QPoly& scale, int order) {
  QSeries s(order);
  QPoly power(1);
  for (int k = 0; k <= order; ++k) {
    s[k] = QRational(power, q_factorial(k));
    power *= scale;
  }
  return s;
}

QPoly q_eulerian(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw IndexOutOfRange("q_eulerian(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  QPoly sum;
  for (int i = 0; i < k; ++i) {
    QPoly inner = QPoly::monomial(binomial(n, i), k - i) + QPoly(binomial(n, i - 1));
    QPoly term = q_int(k - i).pow(static_cast<unsigned>(n)) * inner.shifted(k * i - k);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  QPoly r = sum.shifted(k - k * k);
  if (!r.is_polynomial()) throw NotPolynomial("q_eulerian(" + std::to_string(n) + ", " + std::to_string(k) + ") = " + r.to_string());
  return r;
}

}  // namespace qpb
