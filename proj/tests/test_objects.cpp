#include <doctest.h>

#include <set>

#include "qpb/errors.hpp"
#include "qpb/families.hpp"
#include "qpb/objects.hpp"

using namespace qpb;

TEST_CASE("ordered partitions: counts are Fubini numbers") {
  const std::vector<unsigned> fubini = {1, 1, 3, 13, 75, 541, 4683};
  for (int n = 0; n <= 6; ++n) {
    const auto parts = gen_ordered_partitions(n);
    CHECK(parts.size() == fubini[static_cast<size_t>(n)]);
    std::set<std::string> seen;
    for (const auto& p : parts) seen.insert(p.to_string());
    CHECK(seen.size() == parts.size());
  }
  CHECK_THROWS_AS((void)gen_ordered_partitions(10), SizeTooLarge);
}

TEST_CASE("inv_star on the printed example") {
  CHECK(inv_star(OrderedPartition{{{1, 3, 7}, {2, 6}, {4, 5}}}) == 4);
  CHECK(inv_star(OrderedPartition{{{1}, {2}, {3}}}) == 0);
  CHECK(inv_star(OrderedPartition{{{3}, {2}, {1}}}) == 3);
}

TEST_CASE("fubini and ordered-q oracles match the closed forms") {
  for (int n = 0; n <= 6; ++n) CHECK(fubini_oracle(n) == q_fubini(n));
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) CHECK(ordered_q_oracle(n, k) == ordered_q_pb(n, k));
  CHECK_THROWS_AS((void)gen_alternating_pairs(7, 1), SizeTooLarge);
}

TEST_CASE("pattern recognizers") {
  const BinaryMatrix id2 = {{1, 0}, {0, 1}};
  CHECK(contains_pattern(id2, {true, false, false, true}));
  CHECK_FALSE(is_lonesum(id2));
  CHECK(is_gamma_free(id2));
  const BinaryMatrix gamma = {{1, 1}, {1, 0}};
  CHECK_FALSE(is_gamma_free(gamma));
  CHECK_FALSE(is_perm_matrix(gamma));
  CHECK(is_lonesum(gamma));
  CHECK_FALSE(is_perm_matrix(BinaryMatrix{{1, 0}, {1, 0}}));  // empty column
}

TEST_CASE("class counts") {
  CHECK(class_count(MatrixClass::lonesum, 3, 2) == 46);
  CHECK(class_count(MatrixClass::gamma_free, 3, 2) == 46);
  CHECK(class_count(MatrixClass::perm_matrix, 2, 2) == 7);
  CHECK(class_poly(MatrixClass::perm_matrix, 2, 2, MatrixStatistic::ones_minus_cols) == QPoly::from_ascending({3, 3, 1}));
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      CHECK(class_count(MatrixClass::lonesum, n, k) == classical_pb_negk(n, k));
      CHECK(class_count(MatrixClass::gamma_free, n, k) == classical_pb_negk(n, k));
      CHECK(class_count(MatrixClass::perm_matrix, n, k) == c_relative(n, k));
      CHECK(class_poly(MatrixClass::lonesum, n, k, MatrixStatistic::nu_sum) == lonesum_q_pb(n, k));
    }
  CHECK_THROWS_AS((void)class_count(MatrixClass::lonesum, 5, 5), SizeTooLarge);
}

TEST_CASE("lonesum and gamma-free classes are closed under transposition") {
  for (MatrixClass c : {MatrixClass::lonesum, MatrixClass::gamma_free})
    for (const BinaryMatrix& m : gen_matrix_class(c, 3, 4)) CHECK(in_class(c, m.transposed()));
}

TEST_CASE("nu weight of the printed lonesum example") {
  const BinaryMatrix a = {{1, 1, 1, 0, 0, 1, 1, 1, 0}, {1, 0, 1, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
                          {1, 1, 1, 1, 0, 1, 1, 1, 0}, {1, 0, 1, 0, 0, 1, 0, 1, 0}, {1, 1, 1, 0, 0, 1, 1, 1, 0}};
  CHECK(is_lonesum(a));
  CHECK(nu_weight(a) == 17);
  CHECK(ones_minus_cols(BinaryMatrix{{1, 1}, {0, 1}}) == 1);
}

TEST_CASE("vesztergombi permutations") {
  CHECK(is_vesztergombi({3, 1, 5, 2, 4}, 3, 2));
  CHECK_FALSE(is_vesztergombi({5, 1, 2, 3, 4}, 3, 2));
  CHECK(inversions({3, 1, 5, 2, 4}) == 4);  // pi = 31524
  CHECK(gen_vesztergombi(3, 2).size() == 46);
  const auto perms = gen_vesztergombi(2, 2);
  CHECK(std::is_sorted(perms.begin(), perms.end()));
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; n + k <= 7; ++k) CHECK(vesztergombi_oracle(n, k) == vesztergombi_q_pb(n, k));
  CHECK_THROWS_AS((void)gen_vesztergombi(5, 5), SizeTooLarge);
}

TEST_CASE("gamma-free first column decomposition") {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k) CHECK(gamma_free_first_column_decomposition_check(n, k));
}
