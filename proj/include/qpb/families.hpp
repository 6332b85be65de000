#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qpb/qkernels.hpp"

namespace qpb {

// Index convention: families indexed by the combinatorial branch take k >= 0
// and mean the superscript -k (B_n^{(-k)}, pB_{n,k}, ...). classical_pb,
// cenkci_q_pb and at_q_pb take the signed superscript k.

/// B_n^{(k)} = (-1)^n sum_m (-1)^m m! {n,m} / (m+1)^k, any integer k.
Rational classical_pb(int n, int k);

/// B_n^{(-k)} = sum_m m!{n+1,m+1} m!{k+1,m+1}; symmetric in n and k.
BigInt classical_pb_negk(int n, int k);

/// B_n^{(-k-1)} == B_n^{(-k)} + sum_{m=1}^n C(n,m) B_{n-m+1}^{(-k)}.
bool pb_recursion_check(int n, int k);

/// C_n^k = sum_m m!{n+1,m+1} m!{k,m}.
BigInt c_relative(int n, int k);

/// sum_m [m]!_q {n+1,m+1}_q [m]!_q {k+1,m+1}_q with Carlitz q-Stirling numbers.
QPoly ordered_q_pb(int n, int k);

/// F_{n,q} = sum_k [k]!_q {n,k}_q.
QPoly q_fubini(int n);

/// p_q(n,k) = sum_m m! {n+1,m+1}*_q m! {k+1,m+1}*_q (Cigler variant, plain factorials).
QPoly lonesum_q_pb(int n, int k);

/// pB_{n,k}(q) = q^(nk) sum_m S_{n+1,m+1}(1/q) S_{k+1,m+1}(1/q) [m]!_q^2 q^m.
/// Throws NotPolynomial if the Laurent evaluation leaves a negative exponent.
QPoly vesztergombi_q_pb(int n, int k);

/// Cenkci-Komatsu B_{n,q}^{(k)} = sum_m {n,m} (-q)^(n-m) m! / (m+1)^k.
QRational cenkci_q_pb(int n, int k);

/// Recursion for the Cenkci-Komatsu numbers with the superscripts read as
/// negated indices (the same reading as the classical recursion):
///   B_{n,q}^{(k-1)} == (n+1) B_{n,q}^{(k)} + sum_{i=1}^{n-1} q^i C(n,i+1) B_{n-i,q}^{(k)}.
bool cenkci_recursion_check(int n, int k);
/// The same relation with B^{(k+1)} on the left, taken literally for signed k.
bool cenkci_recursion_check_literal(int n, int k);

/// Both sides of the combinatorial formula for B_{n,q}^{(-k)}:
///   lhs = cenkci_q_pb(n, -k),
///   rhs = q sum_{j<=min(n,k)} (j!)^2 S_2(n,j,q) S_2^{q^-1}(-k+1, j+1),
/// the latter using s2_inv_q's extension to nonpositive arguments.
std::pair<QRational, QRational> cenkci_comb_sides(int n, int k);
bool cenkci_comb_check(int n, int k);
/// Same formula with the second Stirling factor at the index magnitude,
/// S_2^{q^-1}(k+1, j+1) for k >= 0; at q = 1 it reduces termwise to the combinatorial formula.
std::pair<QRational, QRational> cenkci_comb_sides_magnitude(int n, int k);

/// p_{n,k}(q) = (-1)^n sum_m (-1)^m [m]!_q / [m+1]_q^k {n,m}_q.
QRational at_q_pb(int n, int k);

// ---------------------------------------------------------------------------
// Akiyama-Tanigawa triangles.

enum class AtRule { classical, zeng_a, zeng_b };

std::string_view to_string(AtRule rule);

/// Initial row a_{0,m}.
class InitialSequence {
 public:
  /// 1/(m+1)^k (k = 1 gives the Bernoulli row).
  static InitialSequence reciprocal_power(int k);
  /// 1/[m+1]_q.
  static InitialSequence q_reciprocal();
  /// [m+1]_q^k, any integer k.
  static InitialSequence q_power(int k);
  /// Arbitrary entries; lookups past the end throw RowTooShort.
  static InitialSequence explicit_values(std::vector<QRational> values, std::string name = "explicit");

  QRational operator()(int m) const { return term_(m); }
  const std::string& name() const { return name_; }

 private:
  InitialSequence(std::string name, std::function<QRational(int)> term) : name_(std::move(name)), term_(std::move(term)) {}
  std::string name_;
  std::function<QRational(int)> term_;
};

/// Rows of the triangle; row r holds row_len - r entries, and every entry
/// satisfies the generating rule against its two parents.
class Triangle {
 public:
  Triangle(AtRule rule, std::string initial_name, std::vector<std::vector<QRational>> rows)
      : rule_(rule), initial_name_(std::move(initial_name)), rows_(std::move(rows)) {}

  AtRule rule() const { return rule_; }
  const std::string& initial_name() const { return initial_name_; }
  const std::vector<std::vector<QRational>>& rows() const { return rows_; }
  const std::vector<QRational>& row(int r) const { return rows_.at(static_cast<size_t>(r)); }
  std::vector<QRational> leading_column() const;

 private:
  AtRule rule_;
  std::string initial_name_;
  std::vector<std::vector<QRational>> rows_;
};

/// One step of a rule: the entry below-left of (left, right) in column m.
QRational at_step(AtRule rule, int m, const QRational& left, const QRational& right);

/// Builds n_rows rows starting from row_len initial terms.
/// Throws RowTooShort when row_len < n_rows.
Triangle akiyama_tanigawa(AtRule rule, const InitialSequence& initial, int n_rows, int row_len);

/// Leading-column closed forms for Zeng's rules:
///   A: sum_m (-1)^m [m]! {n+1,m+1}_q a_{0,m}
///   B: sum_m (-1)^m [m]! {n,m}_q a_{0,m}
QRational zeng_closed_form(AtRule rule, const InitialSequence& initial, int n);

/// Carlitz q-Bernoulli numbers: the closed sum over k of
/// (-1)^k {n+1,k+1}_q [k]!_q / [k+1]_q for n >= 2, the rule-A triangle
/// started at 1/[m+1]_q for n < 2.
QRational carlitz_beta(int n);

// ---------------------------------------------------------------------------
// Uniform access for tables and the CLI.

enum class FamilyId {
  classical_negk,
  classical_anyk,
  c_relative,
  ordered_q,
  lonesum_q,
  vesztergombi_q,
  permmatrix_q,
  cenkci_q,
  at_q,
};

enum class Carrier { big_integer, rational, qpoly, qrational };

using FamilyValue = std::variant<BigInt, Rational, QPoly, QRational>;

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  Carrier carrier;
  bool signed_k;  // k is the signed superscript rather than the combinatorial index
};

const std::vector<FamilyInfo>& all_families();
const FamilyInfo& family_info(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// Evaluates one family cell. permmatrix_q is the enumeration result over
/// n x k perm-matrices and throws SizeTooLarge when n*k > 24.
FamilyValue family_value(FamilyId id, int n, int k);

/// Exact value of a family cell at a rational q (integers/rationals are
/// returned unchanged).
Rational family_value_at(const FamilyValue& v, const Rational& q);

/// Value collapsed at q = 1.
Rational family_value_at_one(const FamilyValue& v);

}  // namespace qpb
