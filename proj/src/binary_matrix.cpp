#include "qpb/binary_matrix.hpp"

#include <algorithm>

#include "qpb/errors.hpp"

namespace qpb {

BinaryMatrix::BinaryMatrix(int rows, int cols, bool fill)
    : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill ? 1 : 0) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
    for (int v : row) cells_.push_back(v != 0 ? 1 : 0);
  }
}

BinaryMatrix BinaryMatrix::from_bits(int rows, int cols, std::uint64_t bits) {
  BinaryMatrix m(rows, cols);
  for (size_t i = 0; i < m.cells_.size(); ++i) m.cells_[i] = static_cast<std::uint8_t>((bits >> i) & 1U);
  return m;
}

int BinaryMatrix::count_ones() const { return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1)); }

bool BinaryMatrix::row_is_zero(int i) const {
  for (int j = 0; j < cols_; ++j)
    if ((*this)(i, j)) return false;
  return true;
}

bool BinaryMatrix::col_is_zero(int j) const {
  for (int i = 0; i < rows_; ++i)
    if ((*this)(i, j)) return false;
  return true;
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

BinaryMatrix BinaryMatrix::reflected_updown() const {
  BinaryMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(rows_ - 1 - i, j, (*this)(i, j));
  return r;
}

BinaryMatrix BinaryMatrix::rotated_180() const {
  BinaryMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(rows_ - 1 - i, cols_ - 1 - j, (*this)(i, j));
  return r;
}

Json BinaryMatrix::to_json() const {
  Json rows = Json::array();
  for (int i = 0; i < rows_; ++i) {
    Json row = Json::array();
    for (int j = 0; j < cols_; ++j) row.push_back((*this)(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

BinaryMatrix BinaryMatrix::from_json(const Json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  BinaryMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j.at(static_cast<size_t>(r)).size()) != cols) throw DimensionMismatch("ragged matrix");
    for (int c = 0; c < cols; ++c) {
      const int v = j[static_cast<size_t>(r)][static_cast<size_t>(c)].get<int>();
      if (v != 0 && v != 1) throw DimensionMismatch("matrix entries must be 0 or 1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

std::string BinaryMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    if (i != 0) s += '/';
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) ? '1' : '0';
  }
  return s;
}

}  // namespace qpb
