#pragma once

#include <string_view>
#include <vector>

#include "qpb/series.hpp"

namespace qpb {

/// [n]_q = 1 + q + ... + q^(n-1).
QPoly q_int(int n);
/// [n]!_q = [1]_q [2]_q ... [n]_q.
QPoly q_factorial(int n);
/// Gaussian binomial [n choose k]_q; throws IndexOutOfRange unless 0 <= k <= n.
QPoly q_binomial(int n, int k);

/// Classical Stirling numbers of the second kind (0 outside the triangle).
BigInt stirling2(int n, int m);

/// Which q-deformation of the Stirling numbers of the second kind.
///  - carlitz: {n,m} = {n-1,m-1} + [m]_q {n-1,m}, weighting partitions by Inv*.
///  - cigler:  partitions of {0..n-1} weighted by q^(sum of the block holding 0).
///  - shifted: S_{n+1,k} = q^(k-1) S_{n,k-1} + [k]_q S_{n,k}.
enum class StirlingVariant { carlitz, cigler, shifted };

std::string_view to_string(StirlingVariant v);

/// Triangular table {n,m} for 0 <= m <= n <= max_n of one variant.
/// Out-of-triangle lookups return 0.
class QStirlingTable {
 public:
  QStirlingTable(StirlingVariant variant, int max_n);

  StirlingVariant variant() const { return variant_; }
  int max_n() const { return max_n_; }
  /// Throws IndexOutOfRange when n > max_n.
  const QPoly& operator()(int n, int m) const;

 private:
  StirlingVariant variant_;
  int max_n_;
  std::vector<std::vector<QPoly>> rows_;
  QPoly zero_;
};

QPoly q_stirling(StirlingVariant variant, int n, int m);

/// S_2(n,j,q) = sum_k C(n,k) q^(n-k) {k,j}.
QPoly s2_q(int n, int j);

/// S_2^{q^-1}(n+1, j+1) = (1/j!) sum_l C(j,l) (-1)^(j-l) q^-(l+1) (l+1)^n,
/// the t^n/n! coefficient of (q^-1 e^t - 1)^j q^-1 e^t / j!. Defined for every
/// integer n; for n < 0 the powers (l+1)^n are rationals.
QRational s2_inv_q(int n, int j);

/// E_q(scale * z) to order N: coefficient of z^k is scale^k / [k]!_q.
QSeries q_exponential(const QPoly& scale, int order);

/// Rectangular q-Eulerian polynomial
///   q^(k-k^2) sum_{i<k} (-1)^i [k-i]^n q^(ki-k) (C(n,i) q^(k-i) + C(n,i-1)).
/// Throws IndexOutOfRange unless 0 <= k <= n, NotPolynomial if the Laurent
/// result has a negative exponent.
QPoly q_eulerian(int n, int k);

}  // namespace qpb
