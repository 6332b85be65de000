#include <doctest.h>

#include "qpb/errors.hpp"
#include "qpb/verify.hpp"

using namespace qpb;

namespace {

std::string render(const std::vector<CheckReport>& reports) {
  std::string s;
  for (const auto& r : reports) s += r.to_json_line() + "\n";
  return s;
}

}  // namespace

TEST_CASE("suites are deterministic") {
  SuiteBounds b;
  b.max_n = 3;
  b.max_k = 3;
  b.rook_max_dim = 2;
  b.conjecture_max_n = 4;
  CHECK(render(run_suite("all", b)) == render(run_suite("all", b)));
}

TEST_CASE("report layout") {
  const CheckReport r = make_report("x.y", CheckParams{2, std::nullopt, std::nullopt, Rational(1, 2)}, true);
  const Json j = r.to_json();
  CHECK(j["check_id"] == "x.y");
  CHECK(j["status"] == "pass");
  CHECK(j["params"]["n"] == 2);
  CHECK(j["params"]["k"].is_null());
  CHECK(j["params"]["q"] == "1/2");
  CHECK(j["witness"].is_null());
  CHECK(r.to_json_line().find('\n') == std::string::npos);
  CHECK(make_report("x", {}, false, Json{{"lhs", "1"}}).status == CheckStatus::fail);
}

TEST_CASE("every failing report carries a witness") {
  SuiteBounds b;
  b.rook_max_dim = 2;
  for (const auto& r : run_suite("rook-laws", b))
    if (r.status == CheckStatus::fail) CHECK_FALSE(r.witness.is_null());
}

TEST_CASE("cenkci-comb reports but never fails") {
  for (const auto& r : run_suite("cenkci-comb", SuiteBounds{})) {
    CHECK(r.status == CheckStatus::reported);
    CHECK(r.detail.contains("agree"));
  }
}

TEST_CASE("suite names and errors") {
  CHECK(suite_names().back() == "all");
  CHECK_THROWS_AS((void)run_suite("bogus", SuiteBounds{}), UnknownSuite);
  CHECK_THROWS_AS((void)sylvester_conjecture(1), OutOfRange);
  CHECK_THROWS_AS((void)sylvester_conjecture(11), OutOfRange);
  CHECK_THROWS_AS((void)gf_check_cenkci(1, Rational(0), 4), ZeroQ);
}

TEST_CASE("sylvester matrix and W_3") {
  const IntMatrix s = sylvester_matrix(q_int(3), q_int(4));
  CHECK(s == IntMatrix{{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}, {1, 1, 1, 1, 0}, {0, 1, 1, 1, 1}});
  CHECK(conjecture_w(3) == QPoly::from_ascending({1, -3, 6, -7, 5, -1}));
  CHECK(sylvester_conjecture(3).status == CheckStatus::pass);
}

TEST_CASE("generating functions") {
  for (int k : {0, -1, -2, 1}) CHECK(gf_check_classical(k, 6).status == CheckStatus::pass);
  for (const Rational& q : {Rational(1), Rational(2, 3), Rational(-1)})
    CHECK(gf_check_cenkci(-1, q, 5).status == CheckStatus::pass);
  for (int m = 0; m <= 3; ++m) CHECK(gf_check_ernst(m, 6).status == CheckStatus::pass);
}
