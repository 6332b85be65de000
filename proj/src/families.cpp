#include "qpb/families.hpp"

#include <algorithm>
#include <string>

#include "qpb/errors.hpp"
#include "qpb/objects.hpp"

namespace qpb {

namespace {

BigInt ifact(int m) { return factorial(static_cast<unsigned long>(m)); }

std::string cell(int n, int k) { return "(" + std::to_string(n) + ", " + std::to_string(k) + ")"; }

}  // namespace

Rational classical_pb(int n, int k) {
  if (n < 0) throw IndexOutOfRange("classical_pb with n=" + std::to_string(n));
  Rational s = 0;
  for (int m = 0; m <= n; ++m) {
    Rational term = Rational(ifact(m) * stirling2(n, m)) * pow(Rational(m + 1), -static_cast<long>(k));
    if ((n + m) % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

BigInt classical_pb_negk(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("classical_pb_negk" + cell(n, k));
  BigInt s = 0;
  for (int m = 0; m <= std::min(n, k); ++m) s += ifact(m) * stirling2(n + 1, m + 1) * ifact(m) * stirling2(k + 1, m + 1);
  return s;
}

bool pb_recursion_check(int n, int k) {
  BigInt rhs = classical_pb_negk(n, k);
  for (int m = 1; m <= n; ++m) rhs += binomial(n, m) * classical_pb_negk(n - m + 1, k);
  return classical_pb_negk(n, k + 1) == rhs;
}

BigInt c_relative(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("c_relative" + cell(n, k));
  BigInt s = 0;
  for (int m = 0; m <= std::min(n, k); ++m) s += ifact(m) * stirling2(n + 1, m + 1) * ifact(m) * stirling2(k, m);
  return s;
}

QPoly ordered_q_pb(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("ordered_q_pb" + cell(n, k));
  const QStirlingTable st(StirlingVariant::carlitz, std::max(n, k) + 1);
  QPoly s;
  for (int m = 0; m <= std::min(n, k); ++m) {
    const QPoly f = q_factorial(m);
    s += f * st(n + 1, m + 1) * f * st(k + 1, m + 1);
  }
  return s;
}

QPoly q_fubini(int n) {
  if (n < 0) throw IndexOutOfRange("q_fubini(" + std::to_string(n) + ")");
  const QStirlingTable st(StirlingVariant::carlitz, n);
  QPoly s;
  for (int k = 0; k <= n; ++k) s += q_factorial(k) * st(n, k);
  return s;
}

QPoly lonesum_q_pb(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("lonesum_q_pb" + cell(n, k));
  const QStirlingTable st(StirlingVariant::cigler, std::max(n, k) + 1);
  QPoly s;
  for (int m = 0; m <= std::min(n, k); ++m) {
    const BigInt f = ifact(m);
    s += st(n + 1, m + 1) * st(k + 1, m + 1) * (f * f);
  }
  return s;
}

QPoly vesztergombi_q_pb(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("vesztergombi_q_pb" + cell(n, k));
  const QStirlingTable st(StirlingVariant::shifted, std::max(n, k) + 1);
  QPoly s;
  for (int m = 0; m <= std::min(n, k); ++m) {
    const QPoly f = q_factorial(m);
    s += st(n + 1, m + 1).substitute_inverse() * st(k + 1, m + 1).substitute_inverse() * f * f.shifted(m);
  }
  s = s.shifted(n * k);
  if (!s.is_polynomial()) throw NotPolynomial("pB" + cell(n, k) + " = " + s.to_string());
  return s;
}

QRational cenkci_q_pb(int n, int k) {
  if (n < 0) throw IndexOutOfRange("cenkci_q_pb with n=" + std::to_string(n));
  // Coefficient of q^{n-m} collects the m-th term.
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    Rational term = Rational(stirling2(n, m) * ifact(m)) * pow(Rational(m + 1), -static_cast<long>(k));
    if ((n - m) % 2 != 0) term = -term;
    coeffs[static_cast<size_t>(n - m)] = term;
  }
  return from_rational_coeffs(0, coeffs);
}

namespace {

QRational cenkci_recursion_rhs(int n, int k) {
  QRational rhs = QRational(BigInt(n + 1)) * cenkci_q_pb(n, k);
  for (int i = 1; i <= n - 1; ++i)
    rhs += QRational(QPoly::monomial(binomial(n, i + 1), i)) * cenkci_q_pb(n - i, k);
  return rhs;
}

}  // namespace

bool cenkci_recursion_check(int n, int k) {
  if (n < 1) throw IndexOutOfRange("cenkci recursion needs n >= 1");
  return cenkci_q_pb(n, k - 1) == cenkci_recursion_rhs(n, k);
}

bool cenkci_recursion_check_literal(int n, int k) {
  if (n < 1) throw IndexOutOfRange("cenkci recursion needs n >= 1");
  return cenkci_q_pb(n, k + 1) == cenkci_recursion_rhs(n, k);
}

namespace {

QRational cenkci_comb_rhs(int n, int k, int stirling_arg) {
  QRational rhs;
  for (int j = 0; j <= std::min(n, k); ++j) {
    const BigInt f = ifact(j);
    rhs += QRational(s2_q(n, j) * (f * f)) * s2_inv_q(stirling_arg, j);
  }
  return rhs * QRational(QPoly::q_power(1));
}

}  // namespace

std::pair<QRational, QRational> cenkci_comb_sides(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("cenkci_comb" + cell(n, k));
  return {cenkci_q_pb(n, -k), cenkci_comb_rhs(n, k, -k)};
}

std::pair<QRational, QRational> cenkci_comb_sides_magnitude(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("cenkci_comb" + cell(n, k));
  return {cenkci_q_pb(n, -k), cenkci_comb_rhs(n, k, k)};
}

bool cenkci_comb_check(int n, int k) {
  const auto [lhs, rhs] = cenkci_comb_sides(n, k);
  return lhs == rhs;
}

QRational at_q_pb(int n, int k) {
  if (n < 0) throw IndexOutOfRange("at_q_pb with n=" + std::to_string(n));
  const QStirlingTable st(StirlingVariant::carlitz, n);
  QRational s;
  for (int m = 0; m <= n; ++m) {
    QRational term = QRational(q_factorial(m) * st(n, m)) * QRational(q_int(m + 1)).pow(-k);
    if ((n + m) % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

// ---------------------------------------------------------------------------

std::string_view to_string(AtRule rule) {
  switch (rule) {
    case AtRule::classical: return "classical";
    case AtRule::zeng_a: return "zengA";
    case AtRule::zeng_b: return "zengB";
  }
  return "?";
}

InitialSequence InitialSequence::reciprocal_power(int k) {
  return InitialSequence("1/(m+1)^" + std::to_string(k),
                         [k](int m) { return QRational(pow(Rational(m + 1), -static_cast<long>(k))); });
}

InitialSequence InitialSequence::q_reciprocal() {
  return InitialSequence("1/[m+1]", [](int m) { return QRational(QPoly(1), q_int(m + 1)); });
}

InitialSequence InitialSequence::q_power(int k) {
  return InitialSequence("[m+1]^" + std::to_string(k), [k](int m) { return QRational(q_int(m + 1)).pow(k); });
}

InitialSequence InitialSequence::explicit_values(std::vector<QRational> values, std::string name) {
  return InitialSequence(std::move(name), [values = std::move(values)](int m) {
    if (m < 0 || m >= static_cast<int>(values.size()))
      throw RowTooShort("initial sequence has " + std::to_string(values.size()) + " terms, needed index " + std::to_string(m));
    return values[static_cast<size_t>(m)];
  });
}

std::vector<QRational> Triangle::leading_column() const {
  std::vector<QRational> col;
  col.reserve(rows_.size());
  for (const auto& r : rows_) col.push_back(r.front());
  return col;
}

QRational at_step(AtRule rule, int m, const QRational& left, const QRational& right) {
  switch (rule) {
    case AtRule::classical: return QRational(BigInt(m + 1)) * (left - right);
    case AtRule::zeng_a: return QRational(q_int(m + 1)) * (left - right);
    case AtRule::zeng_b: return QRational(q_int(m)) * left - QRational(q_int(m + 1)) * right;
  }
  return {};
}

Triangle akiyama_tanigawa(AtRule rule, const InitialSequence& initial, int n_rows, int row_len) {
  if (n_rows < 1 || row_len < n_rows)
    throw RowTooShort("row length " + std::to_string(row_len) + " cannot feed " + std::to_string(n_rows) + " rows");
  std::vector<std::vector<QRational>> rows;
  rows.reserve(static_cast<size_t>(n_rows));
  std::vector<QRational> row;
  for (int m = 0; m < row_len; ++m) row.push_back(initial(m));
  rows.push_back(row);
  for (int r = 1; r < n_rows; ++r) {
    const auto& prev = rows.back();
    std::vector<QRational> next;
    next.reserve(prev.size() - 1);
    for (size_t m = 0; m + 1 < prev.size(); ++m) next.push_back(at_step(rule, static_cast<int>(m), prev[m], prev[m + 1]));
    rows.push_back(std::move(next));
  }
  return Triangle(rule, initial.name(), std::move(rows));
}

QRational zeng_closed_form(AtRule rule, const InitialSequence& initial, int n) {
  if (n < 0) throw IndexOutOfRange("zeng_closed_form with n=" + std::to_string(n));
  QRational s;
  if (rule == AtRule::classical) {
    for (int m = 0; m <= n; ++m) {
      QRational term = QRational(BigInt(ifact(m) * stirling2(n + 1, m + 1))) * initial(m);
      s += m % 2 == 0 ? term : -term;
    }
    return s;
  }
  const int top = rule == AtRule::zeng_a ? n + 1 : n;
  const QStirlingTable st(StirlingVariant::carlitz, top);
  for (int m = 0; m <= n; ++m) {
    const QPoly& stir = rule == AtRule::zeng_a ? st(n + 1, m + 1) : st(n, m);
    QRational term = QRational(q_factorial(m) * stir) * initial(m);
    s += m % 2 == 0 ? term : -term;
  }
  return s;
}

QRational carlitz_beta(int n) {
  if (n < 0) throw IndexOutOfRange("carlitz_beta with n=" + std::to_string(n));
  if (n < 2) return akiyama_tanigawa(AtRule::zeng_a, InitialSequence::q_reciprocal(), n + 1, n + 1).row(n).front();
  const QStirlingTable st(StirlingVariant::carlitz, n + 1);
  QRational s;
  for (int k = 0; k <= n; ++k) {
    QRational term(q_factorial(k) * st(n + 1, k + 1), q_int(k + 1));
    s += k % 2 == 0 ? term : -term;
  }
  return s;
}

// ---------------------------------------------------------------------------

const std::vector<FamilyInfo>& all_families() {
  static const std::vector<FamilyInfo> families = {
      {FamilyId::classical_negk, "classical_negk", Carrier::big_integer, false},
      {FamilyId::classical_anyk, "classical_anyk", Carrier::rational, true},
      {FamilyId::c_relative, "c_relative", Carrier::big_integer, false},
      {FamilyId::ordered_q, "ordered_q", Carrier::qpoly, false},
      {FamilyId::lonesum_q, "lonesum_q", Carrier::qpoly, false},
      {FamilyId::vesztergombi_q, "vesztergombi_q", Carrier::qpoly, false},
      {FamilyId::permmatrix_q, "permmatrix_q", Carrier::qpoly, false},
      {FamilyId::cenkci_q, "cenkci_q", Carrier::qrational, true},
      {FamilyId::at_q, "at_q", Carrier::qrational, true},
  };
  return families;
}

const FamilyInfo& family_info(FamilyId id) {
  for (const auto& f : all_families())
    if (f.id == id) return f;
  throw IndexOutOfRange("unknown family id");
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& f : all_families())
    if (f.name == name) return f.id;
  return std::nullopt;
}

FamilyValue family_value(FamilyId id, int n, int k) {
  switch (id) {
    case FamilyId::classical_negk: return classical_pb_negk(n, k);
    case FamilyId::classical_anyk: return classical_pb(n, k);
    case FamilyId::c_relative: return c_relative(n, k);
    case FamilyId::ordered_q: return ordered_q_pb(n, k);
    case FamilyId::lonesum_q: return lonesum_q_pb(n, k);
    case FamilyId::vesztergombi_q: return vesztergombi_q_pb(n, k);
    case FamilyId::permmatrix_q:
      if (n < 0 || k < 0) throw IndexOutOfRange("permmatrix_q" + cell(n, k));
      return class_poly(MatrixClass::perm_matrix, n, k, MatrixStatistic::ones_minus_cols);
    case FamilyId::cenkci_q: return cenkci_q_pb(n, k);
    case FamilyId::at_q: return at_q_pb(n, k);
  }
  throw IndexOutOfRange("unknown family id");
}

Rational family_value_at(const FamilyValue& v, const Rational& q) {
  struct Visitor {
    const Rational& q;
    Rational operator()(const BigInt& x) const { return Rational(x); }
    Rational operator()(const Rational& x) const { return x; }
    Rational operator()(const QPoly& x) const { return x.evaluate(q); }
    Rational operator()(const QRational& x) const { return x.evaluate(q); }
  };
  return std::visit(Visitor{q}, v);
}

Rational family_value_at_one(const FamilyValue& v) { return family_value_at(v, Rational(1)); }

}  // namespace qpb
