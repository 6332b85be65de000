#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "qpb/oeis.hpp"

#include <httplib.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "qpb/errors.hpp"
#include "qpb/families.hpp"

#ifndef QPB_FIXTURE_DIR
#define QPB_FIXTURE_DIR "data/oeis"
#endif

namespace qpb {

std::string_view to_string(FixtureSource s) {
  switch (s) {
    case FixtureSource::remote: return "remote";
    case FixtureSource::cache: return "cache";
    case FixtureSource::bundled: return "bundled";
  }
  return "?";
}

std::optional<std::string> HttpTransport::get(const std::string& url) {
  static const std::regex url_re(R"(^(https?://[^/]+)(/.*)$)");
  std::smatch m;
  if (!std::regex_match(url, m, url_re)) return std::nullopt;
  try {
    httplib::Client client(m[1].str());
    client.set_connection_timeout(timeout_seconds_, 0);
    client.set_read_timeout(timeout_seconds_, 0);
    client.set_follow_location(true);
    auto res = client.Get(m[2].str());
    if (!res || res->status != 200) return std::nullopt;
    return res->body;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool is_valid_oeis_id(std::string_view id) {
  static const std::regex id_re(R"(^A\d{6}$)");
  return std::regex_match(id.begin(), id.end(), id_re);
}

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

std::string bfile_url(std::string_view id) { return "https://oeis.org/" + std::string(id) + "/" + bfile_name(id); }

SequenceFixture parse_bfile(std::string_view id, std::string_view text, FixtureSource source) {
  SequenceFixture f{std::string(id), {}, source, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  static const std::regex reader_re(R"(^#\s*reader:\s*(\S+)\s*$)");
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::smatch m;
      if (std::regex_match(line, m, reader_re)) f.reader = m[1].str();
      continue;
    }
    std::istringstream fields(line);
    std::string index;
    std::string value;
    if (!(fields >> index >> value)) continue;
    try {
      f.terms.emplace_back(value);
    } catch (const std::invalid_argument&) {
      throw NotFound(std::string(id) + ": unparsable b-file line '" + line + "'");
    }
  }
  if (f.terms.empty()) throw NotFound(std::string(id) + ": no terms");
  return f;
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("QPB_CACHE_DIR"); dir != nullptr && *dir != '\0') return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') return std::filesystem::path(xdg) / "qpb";
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') return std::filesystem::path(home) / ".cache" / "qpb";
  return std::filesystem::temp_directory_path() / "qpb";
}

std::filesystem::path default_fixture_dir() { return QPB_FIXTURE_DIR; }

namespace {

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_cache(const std::filesystem::path& dir, const std::string& name, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const auto tmp = dir / (name + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << body;
    if (!out) return;
  }
  std::filesystem::rename(tmp, dir / name, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

SequenceFixture OeisClient::fetch(std::string_view id, bool offline) {
  if (!is_valid_oeis_id(id)) throw MalformedId("'" + std::string(id) + "' does not match A followed by six digits");
  const std::string name = bfile_name(id);

  if (auto cached = read_file(cache_dir_ / name)) return parse_bfile(id, *cached, FixtureSource::cache);

  bool network_failed = false;
  if (!offline) {
    if (auto body = transport_.get(bfile_url(id))) {
      try {
        SequenceFixture f = parse_bfile(id, *body, FixtureSource::remote);
        write_cache(cache_dir_, name, *body);
        return f;
      } catch (const NotFound&) {
        network_failed = true;
      }
    } else {
      network_failed = true;
    }
  }

  if (auto bundled = read_file(fixture_dir_ / name)) return parse_bfile(id, *bundled, FixtureSource::bundled);

  if (network_failed) throw NetworkError("could not download " + bfile_url(id) + " and no local copy exists");
  throw NotFound(std::string(id) + " is neither cached nor bundled");
}

std::string_view to_string(TableReader r) { return r == TableReader::antidiagonal ? "antidiagonal" : "row"; }

std::optional<TableReader> parse_reader(std::string_view name) {
  if (name == "antidiagonal") return TableReader::antidiagonal;
  if (name == "row") return TableReader::row;
  return std::nullopt;
}

std::vector<BigInt> arrange_table(TableReader reader, int count) {
  std::vector<BigInt> out;
  if (count <= 0) return out;
  out.reserve(static_cast<size_t>(count));
  if (reader == TableReader::antidiagonal) {
    for (int d = 0; static_cast<int>(out.size()) < count; ++d)
      for (int n = 0; n <= d && static_cast<int>(out.size()) < count; ++n) out.push_back(classical_pb_negk(n, d - n));
    return out;
  }
  int side = 1;
  while (side * side < count) ++side;
  for (int k = 0; static_cast<int>(out.size()) < count; ++k)
    for (int n = 0; n < side && static_cast<int>(out.size()) < count; ++n) out.push_back(classical_pb_negk(n, k));
  return out;
}

CheckReport crosscheck_table(const SequenceFixture& fixture, TableReader reader, int bound) {
  const int count = std::min(bound, static_cast<int>(fixture.terms.size()));
  const std::vector<BigInt> ours = arrange_table(reader, count);
  CheckParams params{std::nullopt, std::nullopt, count, std::nullopt};
  const std::string id = "oeis." + fixture.id + "." + std::string(to_string(reader));
  for (int i = 0; i < count; ++i) {
    if (ours[static_cast<size_t>(i)] != fixture.terms[static_cast<size_t>(i)]) {
      Json w = Json::object();
      w["index"] = i;
      w["expected"] = to_json(fixture.terms[static_cast<size_t>(i)]);
      w["computed"] = to_json(ours[static_cast<size_t>(i)]);
      return make_report(id, params, false, w);
    }
  }
  CheckReport r = make_report(id, params, true);
  r.detail = Json{{"source", std::string(to_string(fixture.source))}, {"terms", count}};
  return r;
}

}  // namespace qpb
