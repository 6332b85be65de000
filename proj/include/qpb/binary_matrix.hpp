#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qpb/serialize.hpp"

namespace qpb {

/// Dense 0/1 matrix. Indices are 0-based in the API; statistics that the
/// combinatorics defines on 1-based indices convert explicitly.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols, bool fill = false);
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);
  /// Row-major bit pattern: bit (i * cols + j) is entry (i, j).
  static BinaryMatrix from_bits(int rows, int cols, std::uint64_t bits);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool operator()(int i, int j) const { return cells_[index(i, j)] != 0; }
  void set(int i, int j, bool v) { cells_[index(i, j)] = v ? 1 : 0; }
  int count_ones() const;
  bool row_is_zero(int i) const;
  bool col_is_zero(int j) const;

  BinaryMatrix transposed() const;
  /// Reverses the row order.
  BinaryMatrix reflected_updown() const;
  BinaryMatrix rotated_180() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  /// Lists of 0/1 rows.
  Json to_json() const;
  static BinaryMatrix from_json(const Json& j);
  std::string to_string() const;

 private:
  size_t index(int i, int j) const { return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

}  // namespace qpb
