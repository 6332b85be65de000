#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpb/bigint.hpp"
#include "qpb/verify.hpp"

namespace qpb {

enum class FixtureSource { remote, cache, bundled };
std::string_view to_string(FixtureSource s);

struct SequenceFixture {
  std::string id;
  std::vector<BigInt> terms;
  FixtureSource source = FixtureSource::bundled;
  /// Value of a "# reader: ..." metadata line, empty when absent.
  std::string reader;
};

/// HTTP GET; returns the body on status 200, nullopt on any failure.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::optional<std::string> get(const std::string& url) = 0;
};

/// HTTPS transport backed by cpp-httplib.
class HttpTransport : public Transport {
 public:
  explicit HttpTransport(int timeout_seconds = 10) : timeout_seconds_(timeout_seconds) {}
  std::optional<std::string> get(const std::string& url) override;

 private:
  int timeout_seconds_;
};

/// ^A\d{6}$
bool is_valid_oeis_id(std::string_view id);
/// https://oeis.org/A099594/b099594.txt
std::string bfile_url(std::string_view id);
/// b099594.txt
std::string bfile_name(std::string_view id);

/// Parses "index value" lines; '#' lines are comments, "# reader: x" is read
/// into `reader`. Throws NotFound when no term is present.
SequenceFixture parse_bfile(std::string_view id, std::string_view text, FixtureSource source);

/// QPB_CACHE_DIR, else $XDG_CACHE_HOME/qpb, else $HOME/.cache/qpb.
std::filesystem::path default_cache_dir();
/// Directory of the fixtures shipped with the source tree.
std::filesystem::path default_fixture_dir();

class OeisClient {
 public:
  OeisClient(Transport& transport, std::filesystem::path cache_dir, std::filesystem::path fixture_dir)
      : transport_(transport), cache_dir_(std::move(cache_dir)), fixture_dir_(std::move(fixture_dir)) {}

  /// Cache first, then the network (online only; a successful download is
  /// cached), then the bundled fixture. Offline never touches the transport.
  /// Throws MalformedId, NetworkError when an online attempt failed and
  /// nothing local exists, NotFound otherwise.
  SequenceFixture fetch(std::string_view id, bool offline);

  const std::filesystem::path& cache_dir() const { return cache_dir_; }

 private:
  Transport& transport_;
  std::filesystem::path cache_dir_;
  std::filesystem::path fixture_dir_;
};

enum class TableReader { antidiagonal, row };
std::string_view to_string(TableReader r);
std::optional<TableReader> parse_reader(std::string_view name);

/// First `count` values of the B_n^{(-k)} array in reader order.
///  antidiagonal: d = 0, 1, ...; within d, n = 0..d with k = d - n.
///  row: the s x s corner with s = ceil(sqrt(count)), row k = 0, 1, ... of n = 0..s-1.
std::vector<BigInt> arrange_table(TableReader reader, int count);

/// Compares arrange_table against the first `bound` fixture terms (fewer if
/// the fixture is shorter). Fails with the first mismatching index.
CheckReport crosscheck_table(const SequenceFixture& fixture, TableReader reader, int bound);

}  // namespace qpb
