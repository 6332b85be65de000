#include "qpb/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "qpb/errors.hpp"
#include "qpb/objects.hpp"

namespace qpb {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::reported: return "reported";
  }
  return "?";
}

Json CheckReport::to_json() const {
  Json params_json = Json::object();
  params_json["n"] = params.n ? Json(*params.n) : Json(nullptr);
  params_json["k"] = params.k ? Json(*params.k) : Json(nullptr);
  params_json["order"] = params.order ? Json(*params.order) : Json(nullptr);
  params_json["q"] = params.q ? qpb::to_json(*params.q) : Json(nullptr);
  Json j = Json::object();
  j["check_id"] = check_id;
  j["params"] = std::move(params_json);
  j["status"] = std::string(to_string(status));
  j["witness"] = witness;
  if (!detail.is_null()) j["detail"] = detail;
  return j;
}

std::string CheckReport::to_json_line() const { return to_json().dump(); }

CheckReport make_report(std::string id, CheckParams params, bool ok, Json witness) {
  CheckReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  if (!ok) r.witness = witness.is_null() ? Json("no witness recorded") : std::move(witness);
  return r;
}

namespace {

CheckParams nk(int n, int k) { return CheckParams{n, k, std::nullopt, std::nullopt}; }
CheckParams only_n(int n) { return CheckParams{n, std::nullopt, std::nullopt, std::nullopt}; }
CheckParams none() { return CheckParams{}; }

using qpb::to_json;

Json to_json(int v) { return Json(v); }

Json to_json(const std::vector<QRational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(qpb::to_json(x));
  return a;
}

template <class A, class B>
Json sides(const A& lhs, const B& rhs) {
  Json w = Json::object();
  w["lhs"] = to_json(lhs);
  w["rhs"] = to_json(rhs);
  return w;
}

template <class T>
CheckReport compare(std::string id, CheckParams params, const T& lhs, const T& rhs) {
  const bool ok = lhs == rhs;
  return make_report(std::move(id), std::move(params), ok, ok ? Json(nullptr) : sides(lhs, rhs));
}

CheckReport compare_sides(std::string id, CheckParams params, const std::pair<QPoly, QPoly>& s) {
  return compare(std::move(id), std::move(params), s.first, s.second);
}

long c2(long n) { return n * (n - 1) / 2; }

}  // namespace

// ---------------------------------------------------------------------------

IntMatrix sylvester_matrix(const QPoly& p, const QPoly& r) {
  if (p.is_zero() || r.is_zero() || !p.is_polynomial() || !r.is_polynomial())
    throw NotPolynomial("Sylvester matrix needs nonzero polynomials");
  const int dp = p.max_exp();
  const int dr = r.max_exp();
  const int size = dp + dr;
  IntMatrix m(size, size);
  for (int i = 0; i < dr; ++i)
    for (int e = 0; e <= dp; ++e) m(i, i + e) = p.coeff(dp - e);
  for (int i = 0; i < dp; ++i)
    for (int e = 0; e <= dr; ++e) m(dr + i, i + e) = r.coeff(dr - e);
  return m;
}

QPoly conjecture_w(int n) { return charpoly(sylvester_matrix(q_int(n), q_int(n + 1))); }

CheckReport sylvester_conjecture(int n, int bound) {
  if (n < 2 || n > bound)
    throw OutOfRange("conjecture harness needs 2 <= n <= " + std::to_string(bound) + ", got " + std::to_string(n));
  const QPoly w = conjecture_w(n);
  const QPoly lhs = vesztergombi_q_pb(n, 2);
  const QPoly rhs = (QPoly(1) + QPoly::q_power(1)) * w.substitute_negate();
  CheckReport r = compare("conjecture.sylvester", only_n(n), lhs, rhs);
  r.detail = Json::object();
  r.detail["w"] = to_json(w);
  if (r.status == CheckStatus::fail) {
    r.witness["w"] = to_json(w);
    r.detail["negated_matches"] = lhs == -rhs;
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

RationalSeries polylog_series(int k, int order) {
  RationalSeries li(order);
  for (int i = 1; i <= order; ++i) li[i] = pow(Rational(i), -static_cast<long>(k));
  return li;
}

}  // namespace

RationalSeries classical_gf_series(int k, int order) {
  const int work = order + 1;
  const RationalSeries u = RationalSeries::constant(work, Rational(1)) - RationalSeries::exponential(work, Rational(-1));
  return series_compose_div(polylog_series(k, work).compose(u), u);
}

CheckReport gf_check_classical(int k, int order) {
  if (order < 0 || order > 12) throw OutOfRange("gf_check_classical order must be in [0, 12]");
  const RationalSeries s = classical_gf_series(k, order);
  CheckParams params{std::nullopt, k, order, std::nullopt};
  for (int n = 0; n <= order; ++n) {
    const Rational got = s[n] * Rational(factorial(static_cast<unsigned long>(n)));
    const Rational want = classical_pb(n, k);
    if (got != want) {
      Json w = sides(got, want);
      w["n"] = n;
      return make_report("gf.classical", params, false, w);
    }
  }
  return make_report("gf.classical", params, true);
}

RationalSeries cenkci_gf_series(int k, const Rational& q, int order) {
  if (q == 0) throw ZeroQ("the q-parameter generating function needs q != 0");
  const int work = order + 1;
  const RationalSeries den = RationalSeries::constant(work, Rational(1)) - RationalSeries::exponential(work, Rational(-q));
  const RationalSeries u = Rational(1 / q) * den;
  return series_compose_div(q * polylog_series(k, work).compose(u), den);
}

CheckReport gf_check_cenkci(int k, const Rational& q, int order) {
  if (q == 0) throw ZeroQ("the q-parameter generating function needs q != 0");
  if (order < 0 || order > 10) throw OutOfRange("gf_check_cenkci order must be in [0, 10]");
  const RationalSeries s = cenkci_gf_series(k, q, order);
  CheckParams params{std::nullopt, k, order, q};
  for (int n = 0; n <= order; ++n) {
    const Rational got = s[n] * Rational(factorial(static_cast<unsigned long>(n)));
    const Rational want = cenkci_q_pb(n, k).evaluate(q);
    if (got != want) {
      Json w = sides(got, want);
      w["n"] = n;
      return make_report("gf.cenkci", params, false, w);
    }
  }
  return make_report("gf.cenkci", params, true);
}

QSeries ernst_series(int m, int order) {
  QSeries s(order);
  for (int i = 0; i <= m; ++i) {
    QPoly c = q_binomial(m, i).shifted(static_cast<int>(c2(i)));
    if (i % 2 != 0) c = -c;
    s = s + QRational(c) * q_exponential(q_int(m - i), order);
  }
  return QRational(QPoly(1), q_factorial(m).shifted(static_cast<int>(c2(m)))) * s;
}

CheckReport gf_check_ernst(int m, int order) {
  if (m < 0 || m > 4) throw OutOfRange("gf_check_ernst needs 0 <= m <= 4");
  if (order < 0 || order > 8) throw OutOfRange("gf_check_ernst order must be in [0, 8]");
  const QSeries s = ernst_series(m, order);
  const QStirlingTable st(StirlingVariant::carlitz, order);
  CheckParams params{std::nullopt, m, order, std::nullopt};
  for (int n = 0; n <= order; ++n) {
    const QRational got = s[n] * QRational(q_factorial(n));
    const QRational want(st(n, m));
    if (!(got == want)) {
      Json w = sides(got, want);
      w["n"] = n;
      return make_report("gf.ernst", params, false, w);
    }
  }
  return make_report("gf.ernst", params, true);
}

// ---------------------------------------------------------------------------

std::pair<QPoly, QPoly> j_law_sides(int n) { return {q_rook_number(Board::J(n, n), n), q_factorial(n)}; }

std::pair<QPoly, QPoly> h_law_sides(int n, int k, bool with_prefactor) {
  QPoly rhs = q_stirling(StirlingVariant::shifted, n + 1, n + 1 - k);
  if (with_prefactor) rhs = rhs.shifted(static_cast<int>(c2(n)));
  return {q_rook_number(Board::H(n), k), rhs};
}

std::pair<QPoly, QPoly> reflection_law_sides(const Board& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("reflection law needs a square board");
  const int n = a.rows();
  return {q_rook_number(a.reflect_updown(), n), q_rook_number(a, n).substitute_inverse().shifted(static_cast<int>(c2(n)))};
}

namespace {

QPoly block_rhs(const std::vector<QPoly>& r_a, const std::vector<QPoly>& r_bstar, int n, int k) {
  QPoly rhs;
  for (int i = 0; i <= std::min(n, k); ++i)
    rhs += r_a[static_cast<size_t>(k - i)] * r_bstar[static_cast<size_t>(n - i)] * q_factorial(i).shifted(-i * i);
  return rhs;
}

std::vector<QPoly> rook_numbers(const Board& b) {
  std::vector<QPoly> r;
  for (int j = 0; j <= std::min(b.rows(), b.cols()); ++j) r.push_back(q_rook_number(b, j));
  return r;
}

}  // namespace

std::pair<QPoly, QPoly> block_law_sides(const Board& b, const Board& a) {
  const Board glued = block_over(b, a);
  return {q_rook_number(glued, glued.rows()), block_rhs(rook_numbers(a), rook_numbers(b.rotate_180()), b.rows(), a.rows())};
}

std::pair<QPoly, QPoly> v_board_sides(int n, int k) {
  return {q_rook_number(build_v_matrix(n, k), n + k), vesztergombi_q_pb(n, k)};
}

bool is_right_justified(const Board& b) {
  for (int i = 0; i < b.rows(); ++i) {
    bool seen = false;
    for (int j = 0; j < b.cols(); ++j) {
      if (b.has(i, j)) seen = true;
      else if (seen) return false;
    }
  }
  return true;
}

CheckReport reflection_law_sweep(int dim, bool right_justified_only) {
  if (dim < 0 || dim > 4) throw OutOfRange("reflection sweep needs 0 <= dim <= 4");
  const std::string id = right_justified_only ? "rook.reflection_right_justified" : "rook.reflection";
  const std::uint64_t total = std::uint64_t{1} << (dim * dim);
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  Json first;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const Board a(BinaryMatrix::from_bits(dim, dim, bits));
    if (right_justified_only && !is_right_justified(a)) continue;
    ++checked;
    const auto [lhs, rhs] = reflection_law_sides(a);
    if (lhs == rhs) continue;
    if (failed++ == 0) {
      first = sides(lhs, rhs);
      first["board"] = a.cells().to_json();
    }
  }
  CheckParams params{dim, std::nullopt, std::nullopt, std::nullopt};
  if (failed != 0) {
    first["failures"] = failed;
    first["checked"] = checked;
  }
  CheckReport r = make_report(id, params, failed == 0, first);
  r.detail = Json{{"checked", checked}, {"failures", failed}};
  return r;
}

CheckReport block_law_sweep(int dim_b, int dim_a, bool stop_at_first) {
  if (dim_b < 0 || dim_a < 0 || dim_b > 3 || dim_a > 3) throw OutOfRange("block sweep needs block dimensions <= 3");
  const std::uint64_t total_b = std::uint64_t{1} << (dim_b * dim_b);
  const std::uint64_t total_a = std::uint64_t{1} << (dim_a * dim_a);
  std::vector<std::vector<QPoly>> r_a;
  std::vector<std::vector<QPoly>> r_bstar;
  for (std::uint64_t bits = 0; bits < total_a; ++bits) r_a.push_back(rook_numbers(Board(BinaryMatrix::from_bits(dim_a, dim_a, bits))));
  for (std::uint64_t bits = 0; bits < total_b; ++bits)
    r_bstar.push_back(rook_numbers(Board(BinaryMatrix::from_bits(dim_b, dim_b, bits)).rotate_180()));
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  Json first;
  for (std::uint64_t bb = 0; bb < total_b; ++bb) {
    const Board b(BinaryMatrix::from_bits(dim_b, dim_b, bb));
    for (std::uint64_t ab = 0; ab < total_a; ++ab) {
      const Board a(BinaryMatrix::from_bits(dim_a, dim_a, ab));
      ++checked;
      const Board glued = block_over(b, a);
      const QPoly lhs = q_rook_number(glued, glued.rows());
      const QPoly rhs = block_rhs(r_a[ab], r_bstar[bb], dim_b, dim_a);
      if (lhs == rhs) continue;
      if (failed++ == 0) {
        first = sides(lhs, rhs);
        first["b"] = b.cells().to_json();
        first["a"] = a.cells().to_json();
      }
      if (stop_at_first) break;
    }
    if (stop_at_first && failed != 0) break;
  }
  CheckParams params{dim_b, dim_a, std::nullopt, std::nullopt};
  if (failed != 0) {
    first["failures"] = failed;
    first["checked"] = checked;
    first["exhaustive"] = !stop_at_first;
  }
  CheckReport r = make_report("rook.block", params, failed == 0, first);
  r.detail = Json{{"checked", checked}, {"failures", failed}, {"exhaustive", !(stop_at_first && failed != 0)}};
  return r;
}

// ---------------------------------------------------------------------------
// Suites.

namespace {

using Reports = std::vector<CheckReport>;

const std::vector<std::vector<long>>& printed_value_table() {
  // Rows are k = 0..5 (superscript -k), columns n = 0..5.
  static const std::vector<std::vector<long>> table = {
      {1, 1, 1, 1, 1, 1},
      {1, 2, 4, 8, 16, 32},
      {1, 4, 14, 46, 146, 454},
      {1, 8, 46, 230, 1066, 4718},
      {1, 16, 146, 1066, 6902, 41506},
      {1, 32, 454, 4718, 41506, 329462},
  };
  return table;
}

void golden_suite(Reports& out) {
  const auto& table = printed_value_table();
  for (int k = 0; k < 6; ++k)
    for (int n = 0; n < 6; ++n)
      out.push_back(compare("golden.value_table", nk(n, k), classical_pb_negk(n, k), BigInt(table[static_cast<size_t>(k)][static_cast<size_t>(n)])));

  const std::vector<QPoly> fubini = {QPoly(1), QPoly(1), QPoly::from_ascending({2, 1}), QPoly::from_ascending({4, 5, 3, 1}),
                                     QPoly::from_ascending({8, 17, 20, 16, 9, 4, 1})};
  for (int n = 0; n < static_cast<int>(fubini.size()); ++n)
    out.push_back(compare("golden.q_fubini", only_n(n), q_fubini(n), fubini[static_cast<size_t>(n)]));

  out.push_back(compare("golden.ordered_q", nk(3, 1), ordered_q_pb(3, 1), QPoly::from_ascending({4, 3, 1})));
  out.push_back(compare("golden.vesztergombi_q", nk(2, 2), vesztergombi_q_pb(2, 2), QPoly::from_ascending({1, 3, 5, 4, 1})));
  for (int n = 0; n <= 6; ++n) {
    const QPoly want = (QPoly(1) + QPoly::q_power(1)).pow(static_cast<unsigned>(n));
    out.push_back(compare("golden.vesztergombi_q", nk(n, 1), vesztergombi_q_pb(n, 1), want));
    out.push_back(compare("golden.vesztergombi_q", nk(1, n), vesztergombi_q_pb(1, n), want));
  }
  out.push_back(compare("golden.vesztergombi_q", nk(3, 2), vesztergombi_q_pb(3, 2), QPoly::from_ascending({1, 4, 9, 13, 12, 6, 1})));

  const IntMatrix printed_s = {{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}, {1, 1, 1, 1, 0}, {0, 1, 1, 1, 1}};
  out.push_back(make_report("golden.sylvester_matrix", only_n(3), sylvester_matrix(q_int(3), q_int(4)) == printed_s));
  out.push_back(compare("golden.conjecture_w", only_n(3), conjecture_w(3), QPoly::from_ascending({1, -3, 6, -7, 5, -1})));

  out.push_back(compare("golden.perm_v5", nk(3, 2), permanent(to_int_matrix(build_v_matrix(3, 2))), BigInt(46)));

  const BinaryMatrix a = {{1, 1, 1, 0, 0, 1, 1, 1, 0}, {1, 0, 1, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
                          {1, 1, 1, 1, 0, 1, 1, 1, 0}, {1, 0, 1, 0, 0, 1, 0, 1, 0}, {1, 1, 1, 0, 0, 1, 1, 1, 0}};
  out.push_back(make_report("golden.lonesum_example", none(), is_lonesum(a)));
  out.push_back(compare("golden.nu_weight", none(), nu_weight(a), 17));

  const Permutation pi = {3, 1, 5, 2, 4};
  out.push_back(make_report("golden.fig3_vesztergombi", nk(3, 2), is_vesztergombi(pi, 3, 2)));
  out.push_back(compare("golden.fig3_gr_inv", nk(3, 2), gr_inv(RookConfig::from_permutation(build_v_matrix(3, 2), pi)), 4));
  out.push_back(compare("golden.fig3_inversions", nk(3, 2), inversions(pi), 4));

  const OrderedPartition omega{{{1, 3, 7}, {2, 6}, {4, 5}}};
  out.push_back(compare("golden.inv_star", none(), inv_star(omega), 4));
}

void q1_collapse_suite(const SuiteBounds& b, Reports& out) {
  for (int n = 0; n <= b.max_n; ++n)
    for (int k = 0; k <= b.max_k; ++k) {
      const Rational classical(classical_pb_negk(n, k));
      out.push_back(compare("q1.ordered_q", nk(n, k), Rational(ordered_q_pb(n, k).evaluate_at_one()), classical));
      out.push_back(compare("q1.lonesum_q", nk(n, k), Rational(lonesum_q_pb(n, k).evaluate_at_one()), classical));
      out.push_back(compare("q1.vesztergombi_q", nk(n, k), Rational(vesztergombi_q_pb(n, k).evaluate_at_one()), classical));
      out.push_back(compare("q1.cenkci_q", nk(n, -k), cenkci_q_pb(n, -k).evaluate(1), classical));
      out.push_back(compare("q1.at_q", nk(n, -k), at_q_pb(n, -k).evaluate(1), classical));
      out.push_back(compare("q1.at_q", nk(n, k), at_q_pb(n, k).evaluate(1), classical_pb(n, k)));
      out.push_back(compare("q1.cenkci_q", nk(n, k), cenkci_q_pb(n, k).evaluate(1), classical_pb(n, k)));
      if (n * k <= kMaxScanCells)
        out.push_back(compare("q1.permmatrix_q", nk(n, k),
                              Rational(class_poly(MatrixClass::perm_matrix, n, k, MatrixStatistic::ones_minus_cols).evaluate_at_one()),
                              Rational(c_relative(n, k))));
    }
}

void oracles_suite(const SuiteBounds& b, Reports& out) {
  for (int n = 0; n <= std::min(std::max(b.max_n, b.max_k), 9); ++n)
    out.push_back(compare("oracle.fubini", only_n(n), fubini_oracle(n), q_fubini(n)));
  for (int n = 0; n <= b.max_n; ++n)
    for (int k = 0; k <= b.max_k; ++k) {
      if (n <= 6 && k <= 6) out.push_back(compare("oracle.ordered_q", nk(n, k), ordered_q_oracle(n, k), ordered_q_pb(n, k)));
      if (n * k <= kMaxScanCells) {
        out.push_back(compare("oracle.lonesum_q", nk(n, k), class_poly(MatrixClass::lonesum, n, k, MatrixStatistic::nu_sum), lonesum_q_pb(n, k)));
        const BigInt pb = classical_pb_negk(n, k);
        out.push_back(compare("oracle.lonesum_count", nk(n, k), BigInt(static_cast<unsigned long>(class_count(MatrixClass::lonesum, n, k))), pb));
        out.push_back(compare("oracle.gamma_free_count", nk(n, k), BigInt(static_cast<unsigned long>(class_count(MatrixClass::gamma_free, n, k))), pb));
        out.push_back(compare("oracle.perm_matrix_count", nk(n, k), BigInt(static_cast<unsigned long>(class_count(MatrixClass::perm_matrix, n, k))), c_relative(n, k)));
      }
      if (n * (k + 1) <= kMaxScanCells)
        out.push_back(make_report("oracle.gamma_free_decomposition", nk(n, k), gamma_free_first_column_decomposition_check(n, k)));
      if (n + k <= 9) {
        out.push_back(compare("oracle.vesztergombi_q", nk(n, k), vesztergombi_oracle(n, k), vesztergombi_q_pb(n, k)));
        out.push_back(compare("oracle.perm_v", nk(n, k), permanent(to_int_matrix(build_v_matrix(n, k))), classical_pb_negk(n, k)));
      }
      if (n + k <= 7) out.push_back(compare_sides("oracle.v_board", nk(n, k), v_board_sides(n, k)));
    }
}

void rook_laws_suite(const SuiteBounds& b, Reports& out) {
  for (int n = 0; n <= 5; ++n) out.push_back(compare_sides("rook.j_law", only_n(n), j_law_sides(n)));
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      out.push_back(compare_sides("rook.h_law_printed", nk(n, k), h_law_sides(n, k, true)));
      out.push_back(compare_sides("rook.h_law", nk(n, k), h_law_sides(n, k, false)));
    }
  const int dim = std::clamp(b.rook_max_dim, 0, 3);
  for (int d = 1; d <= dim; ++d) {
    out.push_back(reflection_law_sweep(d, false));
    out.push_back(reflection_law_sweep(d, true));
  }
  for (int db = 1; db <= dim; ++db)
    for (int da = 1; da <= dim; ++da) out.push_back(block_law_sweep(db, da, db + da > 5));
  for (int n = 0; n <= b.max_n; ++n)
    for (int k = 0; k <= b.max_k; ++k) {
      const Board reflected = block_over(Board::H(k).rotate_180(), Board::H(n)).reflect_updown();
      out.push_back(make_report("rook.v_structure", nk(n, k), reflected == build_v_matrix(n, k)));
    }
  for (int d = 1; d <= dim; ++d) {
    bool ok = true;
    Json witness;
    for (std::uint64_t bits = 0; ok && bits < (std::uint64_t{1} << (d * d)); ++bits) {
      const Board board(BinaryMatrix::from_bits(d, d, bits));
      for (int k = 0; k <= d; ++k) {
        const BigInt at_one = q_rook_number(board, k).evaluate_at_one();
        const BigInt count = rook_count(board, k);
        if (at_one != count) {
          ok = false;
          witness = sides(at_one, count);
          witness["board"] = board.cells().to_json();
          witness["rooks"] = k;
          break;
        }
      }
    }
    out.push_back(make_report("rook.q1_count", only_n(d), ok, witness));
  }
}

void cross_formula_suite(const SuiteBounds& b, Reports& out) {
  for (int n = 0; n <= b.max_n; ++n)
    for (int k = 0; k <= b.max_k; ++k) {
      out.push_back(compare("cross.eq2_eq3", nk(n, -k), classical_pb(n, -k), Rational(classical_pb_negk(n, k))));
      out.push_back(make_report("cross.pb_recursion", nk(n, k), pb_recursion_check(n, k)));
      out.push_back(compare("cross.symmetry_classical", nk(n, k), classical_pb_negk(n, k), classical_pb_negk(k, n)));
      out.push_back(compare("cross.symmetry_ordered_q", nk(n, k), ordered_q_pb(n, k), ordered_q_pb(k, n)));
      out.push_back(compare("cross.symmetry_vesztergombi_q", nk(n, k), vesztergombi_q_pb(n, k), vesztergombi_q_pb(k, n)));
      const QPoly pb = vesztergombi_q_pb(n, k);
      out.push_back(make_report("cross.vesztergombi_shape", nk(n, k), pb.nonnegative_coeffs() && pb.max_exp() == n * k));
    }
  for (int n = 1; n <= b.max_n; ++n)
    for (int k = -b.max_k; k <= 0; ++k) {
      const bool ok = cenkci_recursion_check(n, k);
      Json w;
      if (!ok) w = Json{{"lhs", to_json(cenkci_q_pb(n, k - 1))}};
      out.push_back(make_report("cross.cenkci_recursion", nk(n, k), ok, w));
    }
}

void gf_suite(const SuiteBounds& b, Reports& out) {
  const int order = std::clamp(b.max_order, 0, 8);
  for (int k : {0, -1, -2, -3}) out.push_back(gf_check_classical(k, std::min(order, 12)));
  out.push_back(gf_check_classical(1, std::min(order + 2, 12)));
  out.push_back(gf_check_classical(2, std::min(order, 12)));
  for (const Rational& q : {Rational(1), Rational(2, 3), Rational(-1)})
    for (int k : {0, -1, -2, 1}) out.push_back(gf_check_cenkci(k, q, std::min(order, 10)));
  for (int m = 0; m <= 4; ++m) out.push_back(gf_check_ernst(m, order));
}

InitialSequence generic_initial(int len) {
  // (1 + m q + q^2) / (2m + 3), no structure shared with any rule.
  std::vector<QRational> v;
  for (int m = 0; m < len; ++m)
    v.push_back(QRational(QPoly::from_ascending({1, m, 1}), QPoly(BigInt(2 * m + 3))));
  return InitialSequence::explicit_values(std::move(v), "generic");
}

void at_suite(const SuiteBounds& b, Reports& out) {
  const Triangle classical = akiyama_tanigawa(AtRule::classical, InitialSequence::reciprocal_power(1), 3, 5);
  out.push_back(compare("at.classical_row1", none(), classical.row(1),
                        std::vector<QRational>{Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)}));
  const auto& row2 = classical.row(2);
  out.push_back(compare("at.classical_row2", none(), std::vector<QRational>(row2.begin(), row2.begin() + 3),
                        std::vector<QRational>{Rational(1, 6), Rational(1, 6), Rational(3, 20)}));

  const int rows = std::clamp(b.max_n, 0, 6) + 1;
  const InitialSequence generic = generic_initial(rows);
  for (AtRule rule : {AtRule::zeng_a, AtRule::zeng_b}) {
    const auto col = akiyama_tanigawa(rule, generic, rows, rows).leading_column();
    for (int n = 0; n < rows; ++n)
      out.push_back(compare(std::string("at.closed_form_") + std::string(to_string(rule)), only_n(n), col[static_cast<size_t>(n)],
                            zeng_closed_form(rule, generic, n)));
  }

  out.push_back(compare("at.beta2_at_one", none(), carlitz_beta(2).evaluate(1), Rational(1, 6)));
  const auto beta_col = akiyama_tanigawa(AtRule::zeng_a, InitialSequence::q_reciprocal(), 7, 7).leading_column();
  for (int n = 2; n <= 6; ++n)
    out.push_back(compare("at.beta_closed_form", only_n(n), carlitz_beta(n), beta_col[static_cast<size_t>(n)]));

  const int max_n = std::clamp(b.max_n, 0, 5);
  for (int k = -3; k <= 3; ++k) {
    const auto col = akiyama_tanigawa(AtRule::zeng_b, InitialSequence::q_power(k), max_n + 1, max_n + 1).leading_column();
    for (int n = 0; n <= max_n; ++n) {
      QRational want = at_q_pb(n, -k);
      if (n % 2 != 0) want = -want;
      out.push_back(compare("at.zeng_b_q_power", nk(n, k), col[static_cast<size_t>(n)], want));
    }
  }
}

void cenkci_comb_suite(const SuiteBounds& b, Reports& out) {
  for (int n = 0; n <= std::min(b.max_n, 6); ++n)
    for (int k = 0; k <= std::min(b.max_k, 6); ++k) {
      const auto [lhs, rhs] = cenkci_comb_sides(n, k);
      CheckReport r;
      r.check_id = "cenkci_comb";
      r.params = nk(n, k);
      r.status = CheckStatus::reported;
      r.detail = sides(lhs, rhs);
      r.detail["agree"] = lhs == rhs;
      const auto magnitude = cenkci_comb_sides_magnitude(n, k);
      r.detail["rhs_magnitude"] = to_json(magnitude.second);
      r.detail["agree_magnitude"] = magnitude.first == magnitude.second;
      out.push_back(std::move(r));
    }
}

void conjecture_suite(const SuiteBounds& b, Reports& out) {
  for (int n = 2; n <= b.conjecture_max_n; ++n) out.push_back(sylvester_conjecture(n, std::max(kDefaultConjectureBound, b.conjecture_max_n)));
}

using SuiteFn = std::function<void(const SuiteBounds&, Reports&)>;

const std::vector<std::pair<std::string_view, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string_view, SuiteFn>> table = {
      {"golden", [](const SuiteBounds&, Reports& out) { golden_suite(out); }},
      {"q1-collapse", q1_collapse_suite},
      {"oracles", oracles_suite},
      {"rook-laws", rook_laws_suite},
      {"cross-formula", cross_formula_suite},
      {"gf", gf_suite},
      {"akiyama-tanigawa", at_suite},
      {"cenkci-comb", cenkci_comb_suite},
      {"conjecture", conjecture_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<CheckReport> run_suite(std::string_view suite, const SuiteBounds& bounds) {
  Reports out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) {
      fn(bounds, out);
      found = true;
    }
  }
  if (!found) throw UnknownSuite("'" + std::string(suite) + "'");
  return out;
}

}  // namespace qpb
