#include <doctest.h>

#include "qpb/errors.hpp"
#include "qpb/families.hpp"

using namespace qpb;

namespace {

QPoly one_plus_q() { return QPoly::from_ascending({1, 1}); }

// Stirling numbers from the explicit inclusion-exclusion sum.
BigInt stirling2_explicit(int n, int m) {
  BigInt s = 0;
  for (int j = 0; j <= m; ++j) {
    const BigInt term = binomial(m, j) * pow(BigInt(j), static_cast<unsigned long>(n));
    s += ((m - j) % 2 == 0) ? term : BigInt(-term);
  }
  return s / factorial(static_cast<unsigned long>(m));
}

}  // namespace

TEST_CASE("q-integers, factorials, binomials") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(3) == QPoly::from_ascending({1, 1, 1}));
  CHECK(q_factorial(3) == QPoly::from_ascending({1, 2, 2, 1}));
  CHECK(q_binomial(4, 2) == QPoly::from_ascending({1, 1, 2, 1, 1}));
  CHECK_THROWS_AS((void)q_binomial(2, 3), IndexOutOfRange);
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      // [n,k] [k]! [n-k]! = [n]!
      CHECK(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n));
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
    }
}

TEST_CASE("stirling numbers and q-variants collapse at q = 1") {
  for (int n = 0; n <= 9; ++n)
    for (int m = 0; m <= n; ++m) {
      CHECK(stirling2(n, m) == stirling2_explicit(n, m));
      CHECK(q_stirling(StirlingVariant::carlitz, n, m).evaluate_at_one() == stirling2(n, m));
      CHECK(q_stirling(StirlingVariant::cigler, n, m).evaluate_at_one() == stirling2(n, m));
      CHECK(q_stirling(StirlingVariant::shifted, n, m).evaluate_at_one() == stirling2(n, m));
    }
  CHECK(q_stirling(StirlingVariant::carlitz, 3, 2) == QPoly::from_ascending({2, 1}));
  const QStirlingTable t(StirlingVariant::carlitz, 4);
  CHECK(t(2, 5).is_zero());
  CHECK_THROWS_AS((void)t(5, 1), IndexOutOfRange);
}

TEST_CASE("printed value table and symmetry") {
  CHECK(classical_pb_negk(5, 5) == 329462);
  CHECK(classical_pb_negk(3, 4) == 1066);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) {
      CHECK(classical_pb_negk(n, k) == classical_pb_negk(k, n));
      CHECK(classical_pb(n, -k) == Rational(classical_pb_negk(n, k)));
      CHECK(pb_recursion_check(n, k));
    }
}

TEST_CASE("positive superscript gives Bernoulli numbers") {
  CHECK(classical_pb(0, 1) == 1);
  CHECK(classical_pb(1, 1) == Rational(1, 2));
  CHECK(classical_pb(2, 1) == Rational(1, 6));
  CHECK(classical_pb(3, 1) == 0);
  CHECK(classical_pb(4, 1) == Rational(-1, 30));
}

TEST_CASE("q-families: printed polynomials") {
  CHECK(q_fubini(3) == QPoly::from_ascending({4, 5, 3, 1}));
  CHECK(ordered_q_pb(3, 1) == QPoly::from_ascending({4, 3, 1}));
  CHECK(vesztergombi_q_pb(2, 2) == QPoly::from_ascending({1, 3, 5, 4, 1}));
  for (int n = 0; n <= 6; ++n) CHECK(vesztergombi_q_pb(n, 1) == one_plus_q().pow(static_cast<unsigned>(n)));
  CHECK(cenkci_q_pb(2, -1) == QRational(QPoly::from_ascending({6, -2})));
  CHECK(at_q_pb(1, -1) == QRational(one_plus_q()));
}

TEST_CASE("q-families collapse to the classical array") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= 5; ++k) {
      const BigInt c = classical_pb_negk(n, k);
      CHECK(ordered_q_pb(n, k).evaluate_at_one() == c);
      CHECK(lonesum_q_pb(n, k).evaluate_at_one() == c);
      CHECK(vesztergombi_q_pb(n, k).evaluate_at_one() == c);
      CHECK(cenkci_q_pb(n, -k).evaluate(1) == Rational(c));
      CHECK(at_q_pb(n, -k).evaluate(1) == Rational(c));
      CHECK(at_q_pb(n, k).evaluate(1) == classical_pb(n, k));
    }
}

TEST_CASE("vesztergombi polynomial is symmetric with degree nk") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= 5; ++k) {
      const QPoly p = vesztergombi_q_pb(n, k);
      CHECK(p == vesztergombi_q_pb(k, n));
      CHECK(p.max_exp() == n * k);
      CHECK(p.min_exp() == 0);
    }
}

TEST_CASE("cenkci recursion: negated-index reading holds, literal reading does not") {
  for (int n = 1; n <= 6; ++n)
    for (int k = -4; k <= 0; ++k) {
      CHECK(cenkci_recursion_check(n, k));
      CHECK_FALSE(cenkci_recursion_check_literal(n, k));
    }
}

TEST_CASE("cenkci combinatorial formula agrees at n = 0 only") {
  for (int k = 0; k <= 4; ++k) CHECK(cenkci_comb_check(0, k));
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) CHECK_FALSE(cenkci_comb_check(n, k));
  CHECK_THROWS_AS((void)cenkci_comb_sides(-1, 0), IndexOutOfRange);
}

TEST_CASE("akiyama-tanigawa classical rows") {
  const Triangle t = akiyama_tanigawa(AtRule::classical, InitialSequence::reciprocal_power(1), 3, 5);
  CHECK(t.row(1) == std::vector<QRational>{Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)});
  CHECK(t.row(2)[0] == Rational(1, 6));
  CHECK(t.row(2)[2] == Rational(3, 20));
  CHECK_THROWS_AS((void)akiyama_tanigawa(AtRule::classical, InitialSequence::reciprocal_power(1), 4, 3), RowTooShort);
  const auto short_row = InitialSequence::explicit_values({QRational(1), QRational(2)});
  CHECK_THROWS_AS((void)akiyama_tanigawa(AtRule::zeng_a, short_row, 3, 3), RowTooShort);
}

TEST_CASE("zeng rules match their closed forms") {
  std::vector<QRational> init;
  for (int m = 0; m < 6; ++m) init.push_back(QRational(QPoly::from_ascending({2, -m, 3}), QPoly(BigInt(m + 5))));
  const auto seq = InitialSequence::explicit_values(init);
  for (AtRule rule : {AtRule::zeng_a, AtRule::zeng_b}) {
    const auto col = akiyama_tanigawa(rule, seq, 6, 6).leading_column();
    for (int n = 0; n < 6; ++n) CHECK(col[static_cast<size_t>(n)] == zeng_closed_form(rule, seq, n));
  }
  CHECK(carlitz_beta(2).evaluate(1) == Rational(1, 6));
}

TEST_CASE("zeng rule B from [m+1]^k gives (-1)^n p_{n,-k}, not p_{n,k}") {
  for (int k = -3; k <= 3; ++k) {
    const auto col = akiyama_tanigawa(AtRule::zeng_b, InitialSequence::q_power(k), 6, 6).leading_column();
    for (int n = 0; n <= 5; ++n) {
      const QRational p = at_q_pb(n, -k);
      CHECK(col[static_cast<size_t>(n)] == (n % 2 == 0 ? p : -p));
    }
  }
  const auto col = akiyama_tanigawa(AtRule::zeng_b, InitialSequence::q_power(1), 2, 2).leading_column();
  CHECK(col[1] != at_q_pb(1, 1));
}

TEST_CASE("family registry") {
  for (const FamilyInfo& f : all_families()) {
    REQUIRE(parse_family(f.name).has_value());
    CHECK(*parse_family(f.name) == f.id);
  }
  CHECK_FALSE(parse_family("nope").has_value());
  CHECK(family_value_at_one(family_value(FamilyId::ordered_q, 3, 2)) == Rational(46));
  CHECK(family_value_at(family_value(FamilyId::cenkci_q, 2, -1), Rational(1, 2)) == Rational(5));
  CHECK(std::get<QPoly>(family_value(FamilyId::permmatrix_q, 2, 2)) == QPoly::from_ascending({3, 3, 1}));
  CHECK_THROWS_AS((void)family_value(FamilyId::permmatrix_q, 5, 5), SizeTooLarge);
}
