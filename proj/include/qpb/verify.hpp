#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpb/families.hpp"
#include "qpb/int_matrix.hpp"
#include "qpb/rook.hpp"
#include "qpb/serialize.hpp"

namespace qpb {

enum class CheckStatus { pass, fail, reported };

std::string_view to_string(CheckStatus s);

struct CheckParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> order;
  std::optional<Rational> q;
};

/// One verification outcome. A fail always carries a witness that replays to
/// a genuine inequality through the public operations; `detail` holds
/// informational values for passing or reported checks.
struct CheckReport {
  std::string check_id;
  CheckParams params;
  CheckStatus status = CheckStatus::pass;
  Json witness;  // null unless status is fail
  Json detail;   // null when there is nothing to add

  Json to_json() const;
  /// Single-line JSON, no trailing newline.
  std::string to_json_line() const;
};

/// pass when `ok`, otherwise fail with `witness`.
CheckReport make_report(std::string id, CheckParams params, bool ok, Json witness = nullptr);

struct SuiteBounds {
  int max_n = 4;
  int max_k = 4;
  int max_order = 6;
  int rook_max_dim = 3;
  int conjecture_max_n = 8;
};

const std::vector<std::string_view>& suite_names();

/// Deterministic, stable-ordered reports. Throws UnknownSuite.
std::vector<CheckReport> run_suite(std::string_view suite, const SuiteBounds& bounds);

// ---------------------------------------------------------------------------
// Sylvester conjecture.

inline constexpr int kDefaultConjectureBound = 10;

/// Resultant layout: deg(r) shifted rows of p's coefficients above deg(p)
/// shifted rows of r's, coefficients from the highest power down.
IntMatrix sylvester_matrix(const QPoly& p, const QPoly& r);

/// W_n(q) = det(S - qI) for S = Sylvester([n]_q, [n+1]_q).
QPoly conjecture_w(int n);

/// Checks pB_{n,2}(q) == (1+q) W_n(-q). Throws OutOfRange unless 2 <= n <= bound.
/// When the primary comparison fails, detail records the negated comparison too.
CheckReport sylvester_conjecture(int n, int bound = kDefaultConjectureBound);

// ---------------------------------------------------------------------------
// Generating functions.

/// n! [x^n] Li_k(1 - e^{-x}) / (1 - e^{-x}) == classical_pb(n, k) for n <= order (<= 12).
CheckReport gf_check_classical(int k, int order);
/// Coefficients of the series at q = q_sample, for n <= order (<= 10).
RationalSeries classical_gf_series(int k, int order);

/// n! [t^n] q Li_k((1 - e^{-qt})/q) / (1 - e^{-qt}) at a rational q equals
/// cenkci_q_pb(n, k) evaluated there. Throws ZeroQ for q = 0.
CheckReport gf_check_cenkci(int k, const Rational& q, int order);
RationalSeries cenkci_gf_series(int k, const Rational& q, int order);

/// [n]! [z^n] of (1/([m]! q^{C(m,2)})) sum_i [m,i]_q (-1)^i q^{C(i,2)} E_q(z[m-i])
/// equals the Carlitz {n,m}_q for every n <= order (zero below m); m <= 4, order <= 8.
CheckReport gf_check_ernst(int m, int order);
QSeries ernst_series(int m, int order);

// ---------------------------------------------------------------------------
// Rook-board laws. Each *_sides function returns (lhs, rhs) so a witness can
// be replayed.

/// R_n^{J_{n,n}} vs [n]!_q.
std::pair<QPoly, QPoly> j_law_sides(int n);
/// R_k^{H_n} vs q^{C(n,2)} S_{n+1,n+1-k}(q) (with_prefactor) or S_{n+1,n+1-k}(q).
std::pair<QPoly, QPoly> h_law_sides(int n, int k, bool with_prefactor);
/// R_n^{A'}(q) vs q^{C(n,2)} R_n^A(1/q) for a square board A.
std::pair<QPoly, QPoly> reflection_law_sides(const Board& a);
/// R_{k+n}^{B/A}(q) vs sum_i R_{k-i}^A(q) R_{n-i}^{B*}(q) [i]!_q q^{-i^2}.
std::pair<QPoly, QPoly> block_law_sides(const Board& b, const Board& a);
/// R_{n+k}^{V_{n+k}}(q) vs vesztergombi_q_pb(n, k).
std::pair<QPoly, QPoly> v_board_sides(int n, int k);

/// True when every row's cells form a suffix of the row.
bool is_right_justified(const Board& b);

/// Every square mask of dimension `dim` (optionally only right-justified ones);
/// one aggregated report with the first failing board and the failure count.
CheckReport reflection_law_sweep(int dim, bool right_justified_only);
/// Every pair of square masks B (dim_b) and A (dim_a). With stop_at_first the
/// sweep ends at the first counterexample.
CheckReport block_law_sweep(int dim_b, int dim_a, bool stop_at_first);

}  // namespace qpb
