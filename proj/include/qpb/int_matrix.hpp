#pragma once

#include <initializer_list>
#include <vector>

#include "qpb/qpoly.hpp"

namespace qpb {

/// Dense rectangular matrix of big integers (row-major).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const BigInt& operator()(int i, int j) const { return data_[index(i, j)]; }
  BigInt& operator()(int i, int j) { return data_[index(i, j)]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  size_t index(int i, int j) const { return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

inline constexpr int kDefaultPermanentBound = 20;

/// Permanent by Ryser's inclusion-exclusion over column subsets, visited in
/// Gray-code order so each step updates the row sums by one column.
/// Throws NonSquare, or DimensionTooLarge when the dimension exceeds `bound`.
BigInt permanent(const IntMatrix& m, int bound = kDefaultPermanentBound);

/// det(M - qI), computed division-free (Berkowitz). Throws NonSquare.
QPoly charpoly(const IntMatrix& m);

}  // namespace qpb
