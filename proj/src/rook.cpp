#include "qpb/rook.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "qpb/errors.hpp"

namespace qpb {

Board Board::J(int rows, int cols) { return Board(BinaryMatrix(rows, cols, true)); }

Board Board::H(int n) {
  BinaryMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.set(i - 1, j - 1, i <= n - j + 1);
  return Board(std::move(m));
}

Board Board::T_lower(int n) {
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m.set(i, j, true);
  return Board(std::move(m));
}

Board Board::T_upper(int n) {
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, true);
  return Board(std::move(m));
}

Board block_over(const Board& b, const Board& a) {
  if (b.rows() != b.cols() || a.rows() != a.cols())
    throw DimensionMismatch("block_over needs square blocks, got " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                            " and " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  const int n = b.rows();
  const int k = a.rows();
  BinaryMatrix m(n + k, n + k, true);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, b.has(i, j));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.set(n + i, n + j, a.has(i, j));
  return Board(std::move(m));
}

Board build_v_matrix(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("build_v_matrix with negative parameter");
  const int size = n + k;
  BinaryMatrix m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m.set(i, j, i - j >= -k && i - j <= n);
  return Board(std::move(m));
}

IntMatrix to_int_matrix(const Board& b) {
  IntMatrix m(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(i, j) = b.has(i, j) ? 1 : 0;
  return m;
}

RookConfig::RookConfig(Board board, std::vector<std::pair<int, int>> rooks) : board_(std::move(board)), rooks_(std::move(rooks)) {
  std::vector<bool> row_used(static_cast<size_t>(board_.rows()), false);
  std::vector<bool> col_used(static_cast<size_t>(board_.cols()), false);
  for (const auto& [i, j] : rooks_) {
    const std::string where = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
    if (i < 0 || j < 0 || i >= board_.rows() || j >= board_.cols() || !board_.has(i, j))
      throw InvalidPlacement("rook at " + where + " is not on a board cell");
    if (row_used[static_cast<size_t>(i)] || col_used[static_cast<size_t>(j)])
      throw InvalidPlacement("rook at " + where + " shares a row or column");
    row_used[static_cast<size_t>(i)] = true;
    col_used[static_cast<size_t>(j)] = true;
  }
}

RookConfig RookConfig::from_permutation(Board board, const Permutation& perm) {
  std::vector<std::pair<int, int>> rooks;
  for (size_t i = 0; i < perm.size(); ++i) rooks.emplace_back(static_cast<int>(i), perm[i] - 1);
  return RookConfig(std::move(board), std::move(rooks));
}

namespace {

int inv_from_columns(const Board& b, const std::vector<int>& col_of_row, const std::vector<int>& row_of_col) {
  int inv = 0;
  for (int i = 0; i < b.rows(); ++i) {
    const int rc = col_of_row[static_cast<size_t>(i)];
    for (int j = 0; j < b.cols(); ++j) {
      if (!b.has(i, j)) continue;
      if (rc >= 0 && rc >= j) continue;
      const int cr = row_of_col[static_cast<size_t>(j)];
      if (cr > i) continue;
      ++inv;
    }
  }
  return inv;
}

void check_board_size(const Board& b) {
  if (b.rows() * b.cols() > kMaxRookBoardCells)
    throw SizeTooLarge(std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " board exceeds " +
                       std::to_string(kMaxRookBoardCells) + " cells");
}

}  // namespace

int gr_inv(const RookConfig& c) {
  const Board& b = c.board();
  std::vector<int> col_of_row(static_cast<size_t>(b.rows()), -1);
  std::vector<int> row_of_col(static_cast<size_t>(b.cols()), -1);
  for (const auto& [i, j] : c.rooks()) {
    col_of_row[static_cast<size_t>(i)] = j;
    row_of_col[static_cast<size_t>(j)] = i;
  }
  return inv_from_columns(b, col_of_row, row_of_col);
}

void for_each_placement(const Board& b, int k, const std::function<void(const std::vector<int>&)>& visit) {
  check_board_size(b);
  if (k < 0) throw IndexOutOfRange("negative rook count");
  const int rows = b.rows();
  std::vector<int> col_of_row(static_cast<size_t>(rows), -1);
  std::vector<bool> col_used(static_cast<size_t>(b.cols()), false);
  std::function<void(int, int)> place = [&](int i, int left) {
    if (left == 0) {
      visit(col_of_row);
      return;
    }
    if (rows - i < left) return;
    for (int j = 0; j < b.cols(); ++j) {
      if (!b.has(i, j) || col_used[static_cast<size_t>(j)]) continue;
      col_used[static_cast<size_t>(j)] = true;
      col_of_row[static_cast<size_t>(i)] = j;
      place(i + 1, left - 1);
      col_of_row[static_cast<size_t>(i)] = -1;
      col_used[static_cast<size_t>(j)] = false;
    }
    place(i + 1, left);
  };
  place(0, k);
}

QPoly q_rook_number(const Board& b, int k) {
  std::map<int, unsigned long> tally;
  std::vector<int> row_of_col(static_cast<size_t>(b.cols()), -1);
  for_each_placement(b, k, [&](const std::vector<int>& col_of_row) {
    std::fill(row_of_col.begin(), row_of_col.end(), -1);
    for (size_t i = 0; i < col_of_row.size(); ++i)
      if (col_of_row[i] >= 0) row_of_col[static_cast<size_t>(col_of_row[i])] = static_cast<int>(i);
    ++tally[inv_from_columns(b, col_of_row, row_of_col)];
  });
  QPoly p;
  for (const auto& [e, count] : tally) p += QPoly::monomial(BigInt(count), e);
  return p;
}

BigInt rook_count(const Board& b, int k) {
  if (k < 0) throw IndexOutOfRange("negative rook count");
  if (b.cols() > 20) throw SizeTooLarge("rook_count supports at most 20 columns");
  // ways[mask] = placements on the rows seen so far using exactly the columns in mask.
  std::vector<BigInt> ways(size_t{1} << b.cols(), BigInt(0));
  ways[0] = 1;
  for (int i = 0; i < b.rows(); ++i) {
    std::vector<BigInt> next = ways;
    for (size_t mask = 0; mask < ways.size(); ++mask) {
      if (ways[mask] == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b.has(i, j) && ((mask >> j) & 1U) == 0) next[mask | (size_t{1} << j)] += ways[mask];
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (size_t mask = 0; mask < ways.size(); ++mask)
    if (std::popcount(mask) == k) total += ways[mask];
  return total;
}

}  // namespace qpb
