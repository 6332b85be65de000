#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qpb/binary_matrix.hpp"
#include "qpb/int_matrix.hpp"
#include "qpb/objects.hpp"

namespace qpb {

/// A board is the set of cells holding a 1 in a 0/1 matrix.
class Board {
 public:
  Board() = default;
  explicit Board(BinaryMatrix cells) : cells_(std::move(cells)) {}

  /// All-ones r x c board.
  static Board J(int rows, int cols);
  /// Ones on and above the secondary diagonal: (i, j) present iff i <= n - j + 1 (1-based).
  static Board H(int n);
  /// Lower triangle including the diagonal: i >= j.
  static Board T_lower(int n);
  /// Upper triangle including the diagonal: i <= j.
  static Board T_upper(int n);

  int rows() const { return cells_.rows(); }
  int cols() const { return cells_.cols(); }
  bool has(int i, int j) const { return cells_(i, j); }
  int area() const { return cells_.count_ones(); }
  const BinaryMatrix& cells() const { return cells_; }

  /// Upside-down reflection A'.
  Board reflect_updown() const { return Board(cells_.reflected_updown()); }
  /// Rotation by 180 degrees, B*.
  Board rotate_180() const { return Board(cells_.rotated_180()); }

  friend bool operator==(const Board&, const Board&) = default;

 private:
  BinaryMatrix cells_;
};

/// B/A = [[B, J], [J, A]] for square B (n x n) and A (k x k).
/// Throws DimensionMismatch for non-square blocks.
Board block_over(const Board& b, const Board& a);

/// (n+k) x (n+k) board with cell (i, j) present iff -k <= i - j <= n.
Board build_v_matrix(int n, int k);

/// 0/1 board as an integer matrix (for permanents).
IntMatrix to_int_matrix(const Board& b);

/// Rooks on present cells, no two in a row or column. Positions are 0-based
/// (row, col).
class RookConfig {
 public:
  /// Throws InvalidPlacement when a rook is off the board or shares a line.
  RookConfig(Board board, std::vector<std::pair<int, int>> rooks);
  /// Rook in row i at column perm[i] - 1 (one-line notation, 1-based values).
  static RookConfig from_permutation(Board board, const Permutation& perm);

  const Board& board() const { return board_; }
  const std::vector<std::pair<int, int>>& rooks() const { return rooks_; }

 private:
  Board board_;
  std::vector<std::pair<int, int>> rooks_;
};

/// Cells with no rook weakly to the right in their row and no rook strictly
/// below in their column.
int gr_inv(const RookConfig& c);

/// Largest board handled by placement enumeration: rows * cols <= 49.
inline constexpr int kMaxRookBoardCells = 49;

/// Visits every k-rook placement; col_of_row[i] is the rook column or -1.
/// Throws SizeTooLarge past kMaxRookBoardCells.
void for_each_placement(const Board& b, int k, const std::function<void(const std::vector<int>& col_of_row)>& visit);

/// Garsia-Remmel q-rook number R_k^B(q). Throws SizeTooLarge past
/// kMaxRookBoardCells; returns 0 when k exceeds min(rows, cols).
QPoly q_rook_number(const Board& b, int k);

/// Number of k-rook placements by a row-by-row column-subset recurrence,
/// independent of the enumeration above.
BigInt rook_count(const Board& b, int k);

}  // namespace qpb
