#include "qpb/int_matrix.hpp"

#include <bit>
#include <string>

#include "qpb/errors.hpp"

namespace qpb {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt permanent(const IntMatrix& m, int bound) {
  if (!m.is_square()) throw NonSquare(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const int n = m.rows();
  if (n > bound) throw DimensionTooLarge("permanent of dimension " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  if (n == 0) return 1;

  std::vector<BigInt> row_sums(static_cast<size_t>(n));
  BigInt total = 0;
  unsigned long subset = 0;
  const unsigned long count = 1UL << static_cast<unsigned>(n);
  for (unsigned long k = 1; k < count; ++k) {
    const int col = std::countr_zero(k);
    const unsigned long bit = 1UL << static_cast<unsigned>(col);
    const bool adding = (subset & bit) == 0;
    subset ^= bit;
    for (int i = 0; i < n; ++i) {
      if (adding)
        row_sums[static_cast<size_t>(i)] += m(i, col);
      else
        row_sums[static_cast<size_t>(i)] -= m(i, col);
    }
    BigInt prod = 1;
    for (const auto& s : row_sums) {
      prod *= s;
      if (prod == 0) break;
    }
    if (std::popcount(subset) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return n % 2 == 0 ? total : BigInt(-total);
}

QPoly charpoly(const IntMatrix& m) {
  if (!m.is_square()) throw NonSquare(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const int n = m.rows();
  if (n == 0) return QPoly(1);

  // Coefficients of det(qI - A_r) in descending powers, grown one leading
  // principal block at a time.
  std::vector<BigInt> poly{1, -m(0, 0)};
  for (int r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, -R A^2 S, ...
    std::vector<BigInt> toeplitz(static_cast<size_t>(r) + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    std::vector<BigInt> v(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] = m(i, r);
    for (int k = 2; k <= r + 1; ++k) {
      BigInt dot = 0;
      for (int j = 0; j < r; ++j) dot += m(r, j) * v[static_cast<size_t>(j)];
      toeplitz[static_cast<size_t>(k)] = -dot;
      if (k == r + 1) break;
      std::vector<BigInt> next(static_cast<size_t>(r));
      for (int i = 0; i < r; ++i) {
        BigInt s = 0;
        for (int j = 0; j < r; ++j) s += m(i, j) * v[static_cast<size_t>(j)];
        next[static_cast<size_t>(i)] = s;
      }
      v = std::move(next);
    }
    std::vector<BigInt> grown(static_cast<size_t>(r) + 2);
    for (size_t i = 0; i < grown.size(); ++i)
      for (size_t j = 0; j <= i && j < poly.size(); ++j) grown[i] += toeplitz[i - j] * poly[j];
    poly = std::move(grown);
  }

  // det(M - qI) = (-1)^n det(qI - M); poly[i] is the coefficient of q^(n-i).
  std::vector<BigInt> ascending(static_cast<size_t>(n) + 1);
  for (int e = 0; e <= n; ++e) {
    BigInt c = poly[static_cast<size_t>(n - e)];
    ascending[static_cast<size_t>(e)] = n % 2 == 0 ? c : BigInt(-c);
  }
  return QPoly(0, std::move(ascending));
}

}  // namespace qpb
