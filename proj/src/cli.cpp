#include "qpb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "qpb/errors.hpp"
#include "qpb/families.hpp"
#include "qpb/oeis.hpp"
#include "qpb/serialize.hpp"
#include "qpb/verify.hpp"

namespace qpb {

namespace {

constexpr const char* kConventions =
    "Conventions: k >= 0 selects the combinatorial branch B_n^(-k) for classical_negk, c_relative,\n"
    "ordered_q, lonesum_q, vesztergombi_q and permmatrix_q; classical_anyk, cenkci_q and at_q take\n"
    "the signed superscript k. Matrix and permutation indices are 1-based. Polynomials print in\n"
    "ascending powers of q; JSON carries exact decimal-string coefficients.";

constexpr int kMaxTableIndex = 40;
constexpr int kMaxQTableIndex = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string value_text(const FamilyValue& v) {
  return std::visit([](const auto& x) -> std::string {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, BigInt> || std::is_same_v<std::decay_t<decltype(x)>, Rational>)
      return x.get_str();
    else
      return x.to_string();
  }, v);
}

Json value_json(const FamilyValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

std::string latex_value(const FamilyValue& v) {
  // Exponents become braced groups: q^-12 -> q^{-12}.
  const std::string s = value_text(v);
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '^') {
      out += s[i];
      continue;
    }
    out += "^{";
    size_t j = i + 1;
    if (j < s.size() && s[j] == '-') ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) != 0) ++j;
    out += s.substr(i + 1, j - i - 1) + "}";
    i = j - 1;
  }
  return out;
}

FamilyId require_family(const std::string& name) {
  const auto id = parse_family(name);
  if (!id) {
    std::string known;
    for (const auto& f : all_families()) known += (known.empty() ? "" : ", ") + std::string(f.name);
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
  }
  return *id;
}

void check_bounds(const FamilyInfo& info, int max_n, int min_k, int max_k) {
  if (max_n < 0) throw UsageError("--max-n must be >= 0");
  if (max_k < min_k) throw UsageError("--max-k must be >= --min-k");
  if (min_k < 0 && !info.signed_k) throw UsageError("--min-k < 0 is only meaningful for signed families");
  const bool q_family = info.carrier == Carrier::qpoly || info.carrier == Carrier::qrational;
  const int limit = q_family ? kMaxQTableIndex : kMaxTableIndex;
  if (max_n > limit || max_k > limit || -min_k > limit)
    throw SizeTooLarge("indices above " + std::to_string(limit) + " for family " + std::string(info.name));
}

int cmd_table(const std::string& family, int max_n, int min_k, int max_k, const std::string& format, std::ostream& out) {
  const FamilyId id = require_family(family);
  const FamilyInfo& info = family_info(id);
  if (format != "csv" && format != "json" && format != "latex") throw UsageError("--format must be csv, json or latex");
  check_bounds(info, max_n, min_k, max_k);

  // Rows are k, columns n, as in the printed table.
  std::vector<std::vector<FamilyValue>> grid;
  for (int k = min_k; k <= max_k; ++k) {
    std::vector<FamilyValue> row;
    for (int n = 0; n <= max_n; ++n) row.push_back(family_value(id, n, k));
    grid.push_back(std::move(row));
  }

  if (format == "csv") {
    out << "k\\n";
    for (int n = 0; n <= max_n; ++n) out << ',' << n;
    out << '\n';
    for (int k = min_k; k <= max_k; ++k) {
      out << k;
      for (const auto& v : grid[static_cast<size_t>(k - min_k)]) out << ',' << value_text(v);
      out << '\n';
    }
  } else if (format == "json") {
    Json j = Json::object();
    j["family"] = std::string(info.name);
    j["k_convention"] = info.signed_k ? "signed superscript" : "combinatorial index (superscript -k)";
    Json cells = Json::array();
    for (int k = min_k; k <= max_k; ++k)
      for (int n = 0; n <= max_n; ++n)
        cells.push_back(Json{{"n", n}, {"k", k}, {"value", value_json(grid[static_cast<size_t>(k - min_k)][static_cast<size_t>(n)])}});
    j["cells"] = std::move(cells);
    out << j.dump() << '\n';
  } else {
    out << "\\begin{tabular}{c|" << std::string(static_cast<size_t>(max_n) + 1, 'c') << "}\n";
    out << "$k \\backslash n$";
    for (int n = 0; n <= max_n; ++n) out << " & " << n;
    out << " \\\\ \\hline\n";
    for (int k = min_k; k <= max_k; ++k) {
      out << k;
      for (const auto& v : grid[static_cast<size_t>(k - min_k)]) out << " & $" << latex_value(v) << '$';
      out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
  }
  return kExitOk;
}

int cmd_eval(const std::string& family, int n, int k, const std::string& q_text, const std::string& format, std::ostream& out) {
  const FamilyId id = require_family(family);
  const FamilyInfo& info = family_info(id);
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
  if (n < 0) throw UsageError("--n must be >= 0");
  if (k < 0 && !info.signed_k) throw UsageError("--k < 0 is only meaningful for signed families");
  std::optional<Rational> q;
  if (!q_text.empty()) {
    try {
      q = parse_rational(q_text);
    } catch (const std::invalid_argument&) {
      throw UsageError("--q must be an integer or a fraction a/b, got '" + q_text + "'");
    }
  }
  check_bounds(info, n, std::min(k, 0), std::max(k, 0));
  const FamilyValue v = family_value(id, n, k);
  if (format == "text") {
    out << value_text(v);
    if (q) out << " at q=" << q->get_str() << ": " << family_value_at(v, *q).get_str();
    out << '\n';
  } else {
    Json j{{"family", std::string(info.name)}, {"n", n}, {"k", k}, {"value", value_json(v)}};
    if (q) {
      j["q"] = to_json(*q);
      j["value_at_q"] = to_json(family_value_at(v, *q));
    }
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int emit_reports(const std::vector<CheckReport>& reports, std::ostream& out, std::ostream& err) {
  int failures = 0;
  for (const auto& r : reports) {
    out << r.to_json_line() << '\n';
    if (r.status == CheckStatus::fail) ++failures;
  }
  if (failures != 0) {
    err << failures << " check(s) failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Transport* transport) {
  CLI::App app{"Exact poly-Bernoulli numbers, their q-analogues and brute-force verification.", "qpb"};
  app.footer(kConventions);
  app.require_subcommand(1);

  std::string family = "classical_negk";
  int max_n = 5;
  int max_k = 5;
  int min_k = 0;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "Print the (n, k) grid of a family; rows are k, columns n.");
  table->add_option("--family", family, "Family tag")->capture_default_str();
  table->add_option("--max-n", max_n, "Largest n (columns 0..max-n)")->capture_default_str();
  table->add_option("--max-k", max_k, "Largest k (rows min-k..max-k)")->capture_default_str();
  table->add_option("--min-k", min_k, "Smallest k; negative only for signed families")->capture_default_str();
  table->add_option("--format", format, "csv, json or latex")->capture_default_str();
  table->footer(kConventions);

  int n = 0;
  int k = 0;
  std::string q_text;
  std::string eval_format = "text";
  auto* eval = app.add_subcommand("eval", "Evaluate one family cell, optionally at a rational q.");
  eval->add_option("--family", family, "Family tag")->required();
  eval->add_option("--n", n, "Index n >= 0")->required();
  eval->add_option("--k", k, "Index k (sign convention per family)")->required();
  eval->add_option("--q", q_text, "Rational sample point, e.g. 2/3");
  eval->add_option("--format", eval_format, "text or json")->capture_default_str();
  eval->footer(kConventions);

  std::string suite = "all";
  SuiteBounds bounds;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON-lines reports on stdout.");
  verify->add_option("--suite", suite, "Suite name")->capture_default_str();
  verify->add_option("--max-n", bounds.max_n, "Largest n swept")->capture_default_str();
  verify->add_option("--max-k", bounds.max_k, "Largest k swept")->capture_default_str();
  verify->add_option("--max-order", bounds.max_order, "Series truncation order")->capture_default_str();
  verify->add_option("--rook-dim", bounds.rook_max_dim, "Largest square board dimension for rook laws")->capture_default_str();
  verify->footer(std::string(kConventions) + "\nExit status is 0 unless some report has status fail; reported statuses never fail a run.");

  int conj_max_n = 8;
  int conj_min_n = 2;
  auto* conjecture = app.add_subcommand("conjecture", "Check pB_{n,2}(q) = (1+q) W_n(-q) for min-n..max-n.");
  conjecture->add_option("--max-n", conj_max_n, "Largest n (at most 10)")->capture_default_str();
  conjecture->add_option("--min-n", conj_min_n, "Smallest n (at least 2)")->capture_default_str();

  std::string oeis_id = "A099594";
  bool offline = false;
  std::string reader_name;
  int bound = 21;
  auto* oeis = app.add_subcommand("oeis", "Cross-check the B_n^(-k) array against an OEIS b-file.");
  oeis->add_option("--id", oeis_id, "OEIS identifier, A followed by six digits")->capture_default_str();
  oeis->add_flag("--offline", offline, "Never use the network (cache, then bundled fixture)");
  oeis->add_option("--reader", reader_name, "antidiagonal or row; default from fixture metadata");
  oeis->add_option("--bound", bound, "Number of terms compared")->capture_default_str();
  oeis->footer("Cache directory: QPB_CACHE_DIR, else $XDG_CACHE_HOME/qpb, else ~/.cache/qpb.");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(family, max_n, min_k, max_k, format, out);
    if (*eval) return cmd_eval(family, n, k, q_text, eval_format, out);
    if (*verify) {
      if (bounds.max_n < 0 || bounds.max_k < 0 || bounds.max_order < 0 || bounds.rook_max_dim < 0)
        throw UsageError("bounds must be nonnegative");
      if (bounds.max_n > 8 || bounds.max_k > 8) throw SizeTooLarge("verify sweeps are limited to n, k <= 8");
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) throw UnknownSuite("'" + suite + "'");
      return emit_reports(run_suite(suite, bounds), out, err);
    }
    if (*conjecture) {
      if (conj_min_n < 2 || conj_max_n < conj_min_n) throw UsageError("need 2 <= --min-n <= --max-n");
      if (conj_max_n > kDefaultConjectureBound) throw SizeTooLarge("--max-n above " + std::to_string(kDefaultConjectureBound));
      std::vector<CheckReport> reports;
      for (int m = conj_min_n; m <= conj_max_n; ++m) reports.push_back(sylvester_conjecture(m));
      return emit_reports(reports, out, err);
    }
    if (*oeis) {
      if (!is_valid_oeis_id(oeis_id)) throw MalformedId("'" + oeis_id + "'");
      if (bound < 0) throw UsageError("--bound must be >= 0");
      std::optional<TableReader> reader;
      if (!reader_name.empty()) {
        reader = parse_reader(reader_name);
        if (!reader) throw UsageError("--reader must be antidiagonal or row");
      }
      HttpTransport http;
      OeisClient client(transport != nullptr ? *transport : http, default_cache_dir(), default_fixture_dir());
      const SequenceFixture fixture = client.fetch(oeis_id, offline);
      if (!reader) reader = parse_reader(fixture.reader).value_or(TableReader::antidiagonal);
      return emit_reports({crosscheck_table(fixture, *reader, bound)}, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MalformedId& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnavailable;
  } catch (const NetworkError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnavailable;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace qpb
