#include "qpb/objects.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "qpb/errors.hpp"

namespace qpb {

std::string OrderedPartition::to_string() const {
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i != 0) s += '/';
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j != 0 && blocks[i][j] >= 10) s += ',';
      s += std::to_string(blocks[i][j]);
    }
  }
  return s;
}

int inv_star(const OrderedPartition& p) {
  int inv = 0;
  for (size_t j = 1; j < p.blocks.size(); ++j) {
    const int min_j = *std::min_element(p.blocks[j].begin(), p.blocks[j].end());
    for (size_t i = 0; i < j; ++i)
      for (int b : p.blocks[i])
        if (b > min_j) ++inv;
  }
  return inv;
}

std::uint64_t for_each_ordered_partition(const std::vector<int>& ground, const PartitionVisitor& visit) {
  std::vector<int> elems = ground;
  std::sort(elems.begin(), elems.end());
  const size_t s = elems.size();
  if (s == 0) {
    visit(OrderedPartition{});
    return 1;
  }
  std::uint64_t count = 0;
  // Restricted growth strings enumerate the unordered partitions; every
  // permutation of the blocks then gives one ordered partition.
  std::vector<int> rgs(s, 0);
  std::vector<int> prefix_max(s, 0);
  OrderedPartition out;
  while (true) {
    const int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
    for (size_t i = 0; i < s; ++i) blocks[static_cast<size_t>(rgs[i])].push_back(elems[i]);
    std::vector<int> order(static_cast<size_t>(nblocks));
    std::iota(order.begin(), order.end(), 0);
    do {
      out.blocks.clear();
      for (int b : order) out.blocks.push_back(blocks[static_cast<size_t>(b)]);
      visit(out);
      ++count;
    } while (std::next_permutation(order.begin(), order.end()));

    // Next restricted growth string.
    size_t i = s - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (size_t j = i + 1; j < s; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return count;
}

namespace {

std::vector<int> range_inclusive(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void require_fubini_size(int n) {
  if (n < 0) throw IndexOutOfRange("negative ground set size");
  if (n > 9) throw SizeTooLarge("ordered partitions of " + std::to_string(n) + " elements (limit 9)");
}

}  // namespace

std::vector<OrderedPartition> gen_ordered_partitions(int n) {
  require_fubini_size(n);
  std::vector<OrderedPartition> out;
  for_each_ordered_partition(range_inclusive(1, n), [&](const OrderedPartition& p) { out.push_back(p); });
  return out;
}

QPoly fubini_oracle(int n) {
  require_fubini_size(n);
  std::vector<BigInt> counts;
  for_each_ordered_partition(range_inclusive(1, n), [&](const OrderedPartition& p) {
    const size_t w = static_cast<size_t>(inv_star(p));
    if (counts.size() <= w) counts.resize(w + 1, BigInt(0));
    ++counts[w];
  });
  return QPoly(0, std::move(counts));
}

int alternating_pair_weight(const AlternatingPair& p) { return inv_star(p.blue) + inv_star(p.red); }

std::vector<AlternatingPair> gen_alternating_pairs(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("negative alternating-pair size");
  if (n > 6 || k > 6) throw SizeTooLarge("alternating pairs beyond n, k <= 6");
  std::map<size_t, std::vector<OrderedPartition>> blue_by_size;
  std::map<size_t, std::vector<OrderedPartition>> red_by_size;
  for_each_ordered_partition(range_inclusive(0, n), [&](const OrderedPartition& p) {
    if (p.blocks.front().front() == 0) blue_by_size[p.blocks.size()].push_back(p);
  });
  for_each_ordered_partition(range_inclusive(1, k + 1), [&](const OrderedPartition& p) {
    if (p.blocks.back().back() == k + 1) red_by_size[p.blocks.size()].push_back(p);
  });
  std::vector<AlternatingPair> out;
  for (const auto& [size, blues] : blue_by_size) {
    const auto it = red_by_size.find(size);
    if (it == red_by_size.end()) continue;
    for (const auto& b : blues)
      for (const auto& r : it->second) out.push_back({b, r});
  }
  return out;
}

QPoly ordered_q_oracle(int n, int k) {
  QPoly s;
  for (const auto& p : gen_alternating_pairs(n, k)) s += QPoly::q_power(alternating_pair_weight(p));
  return s;
}

// ---------------------------------------------------------------------------

std::string_view to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::lonesum: return "lonesum";
    case MatrixClass::gamma_free: return "gamma_free";
    case MatrixClass::perm_matrix: return "perm_matrix";
  }
  return "?";
}

std::string_view to_string(MatrixStatistic s) {
  switch (s) {
    case MatrixStatistic::nu_sum: return "nu_sum";
    case MatrixStatistic::ones_minus_cols: return "ones_minus_cols";
    case MatrixStatistic::none: return "none";
  }
  return "?";
}

namespace {

// Row bitmasks: bit j of rows[i] is entry (i, j).
struct Rows {
  int cols = 0;
  std::vector<std::uint32_t> rows;

  bool at(int i, int j) const { return (rows[static_cast<size_t>(i)] >> j) & 1U; }
};

Rows to_rows(const BinaryMatrix& m) {
  if (m.cols() > 32) throw SizeTooLarge("matrix with more than 32 columns");
  Rows r{m.cols(), std::vector<std::uint32_t>(static_cast<size_t>(m.rows()), 0)};
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j)) r.rows[static_cast<size_t>(i)] |= 1U << j;
  return r;
}

constexpr Pattern2x2 kAntiDiagonal{false, true, true, false};
constexpr Pattern2x2 kDiagonal{true, false, false, true};
constexpr Pattern2x2 kGamma{true, true, true, false};
constexpr Pattern2x2 kAllOnes{true, true, true, true};

bool rows_contain(const Rows& m, Pattern2x2 p) {
  // Each column of a row pair has a type (top bit | bottom bit << 1); the
  // pattern needs its left type at some column j and its right type at j' > j.
  const int left = (p.a ? 1 : 0) | (p.c ? 2 : 0);
  const int right = (p.b ? 1 : 0) | (p.d ? 2 : 0);
  const int n = static_cast<int>(m.rows.size());
  for (int i = 0; i < n; ++i)
    for (int i2 = i + 1; i2 < n; ++i2) {
      bool seen_left = false;
      for (int j = 0; j < m.cols; ++j) {
        const int type = (m.at(i, j) ? 1 : 0) | (m.at(i2, j) ? 2 : 0);
        if (seen_left && type == right) return true;
        if (type == left) seen_left = true;
      }
    }
  return false;
}

bool rows_all_columns_hit(const Rows& m) {
  std::uint32_t seen = 0;
  for (auto r : m.rows) seen |= r;
  const std::uint32_t full = m.cols == 32 ? ~0U : ((1U << m.cols) - 1U);
  return seen == full;
}

bool rows_in_class(MatrixClass c, const Rows& m) {
  switch (c) {
    case MatrixClass::lonesum: return !rows_contain(m, kAntiDiagonal) && !rows_contain(m, kDiagonal);
    case MatrixClass::gamma_free: return !rows_contain(m, kGamma) && !rows_contain(m, kAllOnes);
    case MatrixClass::perm_matrix:
      return rows_all_columns_hit(m) && !rows_contain(m, kAntiDiagonal) && !rows_contain(m, kGamma);
  }
  return false;
}

int rows_nu_weight(const Rows& m) {
  int w = 0;
  std::uint32_t seen = 0;
  for (size_t i = 0; i < m.rows.size(); ++i) {
    if (m.rows[i] == 0) w += static_cast<int>(i) + 1;
    seen |= m.rows[i];
  }
  for (int j = 0; j < m.cols; ++j)
    if (((seen >> j) & 1U) == 0) w += j + 1;
  return w;
}

int rows_ones_minus_cols(const Rows& m) {
  int ones = 0;
  for (auto r : m.rows) ones += std::popcount(r);
  return ones - m.cols;
}

int rows_statistic(MatrixStatistic s, const Rows& m) {
  switch (s) {
    case MatrixStatistic::nu_sum: return rows_nu_weight(m);
    case MatrixStatistic::ones_minus_cols: return rows_ones_minus_cols(m);
    case MatrixStatistic::none: return 0;
  }
  return 0;
}

template <class F>
void scan_class(MatrixClass c, int n, int k, F&& on_member) {
  if (n < 0 || k < 0) throw IndexOutOfRange("negative matrix dimension");
  if (n * k > kMaxScanCells)
    throw SizeTooLarge(std::to_string(n) + "x" + std::to_string(k) + " exceeds the " + std::to_string(kMaxScanCells) + "-cell scan limit");
  const std::uint64_t total = std::uint64_t{1} << (n * k);
  const std::uint32_t row_mask = k == 0 ? 0U : ((1U << k) - 1U);
  Rows m{k, std::vector<std::uint32_t>(static_cast<size_t>(n), 0)};
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int i = 0; i < n; ++i) m.rows[static_cast<size_t>(i)] = static_cast<std::uint32_t>(bits >> (i * k)) & row_mask;
    if (rows_in_class(c, m)) on_member(m, bits);
  }
}

}  // namespace

bool contains_pattern(const BinaryMatrix& m, Pattern2x2 p) { return rows_contain(to_rows(m), p); }

bool is_lonesum(const BinaryMatrix& m) { return rows_in_class(MatrixClass::lonesum, to_rows(m)); }
bool is_gamma_free(const BinaryMatrix& m) { return rows_in_class(MatrixClass::gamma_free, to_rows(m)); }
bool is_perm_matrix(const BinaryMatrix& m) { return rows_in_class(MatrixClass::perm_matrix, to_rows(m)); }
bool in_class(MatrixClass c, const BinaryMatrix& m) { return rows_in_class(c, to_rows(m)); }

int nu_weight(const BinaryMatrix& m) { return rows_nu_weight(to_rows(m)); }
int ones_minus_cols(const BinaryMatrix& m) { return rows_ones_minus_cols(to_rows(m)); }
int statistic(MatrixStatistic s, const BinaryMatrix& m) { return rows_statistic(s, to_rows(m)); }

std::vector<BinaryMatrix> gen_matrix_class(MatrixClass c, int n, int k) {
  std::vector<BinaryMatrix> out;
  scan_class(c, n, k, [&](const Rows&, std::uint64_t bits) { out.push_back(BinaryMatrix::from_bits(n, k, bits)); });
  return out;
}

std::uint64_t class_count(MatrixClass c, int n, int k) {
  std::uint64_t count = 0;
  scan_class(c, n, k, [&](const Rows&, std::uint64_t) { ++count; });
  return count;
}

QPoly class_poly(MatrixClass c, int n, int k, MatrixStatistic s) {
  // Statistics stay small (at most n*k + n + k and the 1-based index sums), so
  // tally in machine integers first.
  std::map<int, std::uint64_t> tally;
  scan_class(c, n, k, [&](const Rows& m, std::uint64_t) { ++tally[rows_statistic(s, m)]; });
  QPoly p;
  for (const auto& [e, count] : tally) p += QPoly::monomial(BigInt(static_cast<unsigned long>(count)), e);
  return p;
}

// ---------------------------------------------------------------------------

bool is_vesztergombi(const Permutation& p, int n, int k) {
  const int size = n + k;
  if (static_cast<int>(p.size()) != size) return false;
  std::vector<bool> used(static_cast<size_t>(size) + 1, false);
  for (int i = 1; i <= size; ++i) {
    const int v = p[static_cast<size_t>(i - 1)];
    if (v < 1 || v > size || used[static_cast<size_t>(v)]) return false;
    used[static_cast<size_t>(v)] = true;
    if (v - i < -k || v - i > n) return false;
  }
  return true;
}

int inversions(const Permutation& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

namespace {

void extend_vesztergombi(int n, int k, Permutation& prefix, std::vector<bool>& used, std::vector<Permutation>& out) {
  const int size = n + k;
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > size) {
    out.push_back(prefix);
    return;
  }
  for (int v = std::max(1, i - k); v <= std::min(size, i + n); ++v) {
    if (used[static_cast<size_t>(v)]) continue;
    used[static_cast<size_t>(v)] = true;
    prefix.push_back(v);
    extend_vesztergombi(n, k, prefix, used, out);
    prefix.pop_back();
    used[static_cast<size_t>(v)] = false;
  }
}

}  // namespace

std::vector<Permutation> gen_vesztergombi(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("negative Vesztergombi parameters");
  if (n + k > 9) throw SizeTooLarge("Vesztergombi permutations beyond n + k <= 9");
  std::vector<Permutation> out;
  Permutation prefix;
  std::vector<bool> used(static_cast<size_t>(n + k) + 1, false);
  extend_vesztergombi(n, k, prefix, used, out);
  return out;
}

QPoly vesztergombi_oracle(int n, int k) {
  QPoly s;
  for (const auto& p : gen_vesztergombi(n, k)) s += QPoly::q_power(inversions(p));
  return s;
}

bool gamma_free_first_column_decomposition_check(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("negative matrix dimension");
  if (n * (k + 1) > kMaxScanCells) throw SizeTooLarge("decomposition check beyond the scan limit");
  // R is the set of rows holding a 1 in the first column; |R| = r can be
  // chosen in C(n, r) ways.
  BigInt rhs = BigInt(static_cast<unsigned long>(class_count(MatrixClass::gamma_free, n, k)));
  for (int r = 1; r <= n; ++r)
    rhs += binomial(n, r) * BigInt(static_cast<unsigned long>(class_count(MatrixClass::gamma_free, n - r + 1, k)));
  return BigInt(static_cast<unsigned long>(class_count(MatrixClass::gamma_free, n, k + 1))) == rhs;
}

}  // namespace qpb
