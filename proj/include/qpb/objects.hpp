#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "qpb/binary_matrix.hpp"
#include "qpb/qpoly.hpp"

namespace qpb {

// Brute-force generators and recognizers. Everything here enumerates objects
// directly and never calls into the closed formulas of families.

/// Ordered set partition; each block is kept sorted ascending.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  std::string to_string() const;  // "137/26/45"
};

/// Pairs (b, B_j) with b in an earlier block B_i (i < j) and b > min B_j.
int inv_star(const OrderedPartition& p);

using PartitionVisitor = std::function<void(const OrderedPartition&)>;

/// Visits every ordered partition of `ground` exactly once; returns the count.
std::uint64_t for_each_ordered_partition(const std::vector<int>& ground, const PartitionVisitor& visit);

/// Ordered partitions of {1..n}; throws SizeTooLarge for n > 9.
std::vector<OrderedPartition> gen_ordered_partitions(int n);
/// Sum of q^{Inv*} over ordered partitions of {1..n}; throws SizeTooLarge for n > 9.
QPoly fubini_oracle(int n);

/// Blue partition of {0̄,1..n} with the 0̄-block first and red partition of
/// {1..k, k+1̄} with the k+1̄-block last, with equal block counts. Encoded
/// with 0 standing for 0̄ and k+1 for k+1̄, so plain integer order is the
/// order used by Inv*.
struct AlternatingPair {
  OrderedPartition blue;
  OrderedPartition red;
};

int alternating_pair_weight(const AlternatingPair& p);
/// Throws SizeTooLarge for n > 6 or k > 6.
std::vector<AlternatingPair> gen_alternating_pairs(int n, int k);
QPoly ordered_q_oracle(int n, int k);

// ---------------------------------------------------------------------------
// 0/1 matrix classes.

enum class MatrixClass { lonesum, gamma_free, perm_matrix };
enum class MatrixStatistic { nu_sum, ones_minus_cols, none };

std::string_view to_string(MatrixClass c);
std::string_view to_string(MatrixStatistic s);

/// 2x2 pattern {{a, b}, {c, d}}.
struct Pattern2x2 {
  bool a, b, c, d;
};

/// True if some rows i < i' and columns j < j' select exactly `p`.
bool contains_pattern(const BinaryMatrix& m, Pattern2x2 p);

/// Avoids [[0,1],[1,0]] and [[1,0],[0,1]].
bool is_lonesum(const BinaryMatrix& m);
/// Avoids [[1,1],[1,0]] and [[1,1],[1,1]].
bool is_gamma_free(const BinaryMatrix& m);
/// Every column has a 1 and avoids [[0,1],[1,0]] and [[1,1],[1,0]].
bool is_perm_matrix(const BinaryMatrix& m);
bool in_class(MatrixClass c, const BinaryMatrix& m);

/// Sum of the 1-based indices of all-zero rows plus those of all-zero columns.
int nu_weight(const BinaryMatrix& m);
/// Number of ones minus number of columns.
int ones_minus_cols(const BinaryMatrix& m);
int statistic(MatrixStatistic s, const BinaryMatrix& m);

inline constexpr int kMaxScanCells = 24;

/// All n x k members of a class by filtering the 2^{nk} candidates.
/// Throws SizeTooLarge when n*k > 24.
std::vector<BinaryMatrix> gen_matrix_class(MatrixClass c, int n, int k);
/// Number of members, same bound.
std::uint64_t class_count(MatrixClass c, int n, int k);
/// Sum of q^{statistic} over the class, same bound.
QPoly class_poly(MatrixClass c, int n, int k, MatrixStatistic s);

// ---------------------------------------------------------------------------
// Vesztergombi permutations.

/// One-line notation, values 1..n+k.
using Permutation = std::vector<int>;

bool is_vesztergombi(const Permutation& p, int n, int k);
/// Pairs i < j with p_i > p_j.
int inversions(const Permutation& p);
/// Permutations of [n+k] with -k <= p(i) - i <= n, lexicographic order.
/// Throws SizeTooLarge for n + k > 9.
std::vector<Permutation> gen_vesztergombi(int n, int k);
QPoly vesztergombi_oracle(int n, int k);

/// Counts Gamma-free matrices by the first-column construction:
/// |G(n,k+1)| == |G(n,k)| + sum over nonempty R of |G(n-|R|+1, k)|,
/// every count taken from exhaustive enumeration. Throws SizeTooLarge when
/// n*(k+1) > 24.
bool gamma_free_first_column_decomposition_check(int n, int k);

}  // namespace qpb
