#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qpb/errors.hpp"
#include "qpb/oeis.hpp"

using namespace qpb;
namespace fs = std::filesystem;

namespace {

const char* kBody =
    "# reader: antidiagonal\n"
    "0 1\n1 1\n2 1\n3 1\n4 2\n5 1\n6 1\n7 4\n8 4\n9 1\n";

struct FakeTransport : Transport {
  std::optional<std::string> body;
  std::vector<std::string> urls;
  std::optional<std::string> get(const std::string& url) override {
    urls.push_back(url);
    return body;
  }
};

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("qpb_test_" + tag + "_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("id validation and urls") {
  CHECK(is_valid_oeis_id("A099594"));
  CHECK_FALSE(is_valid_oeis_id("X1"));
  CHECK_FALSE(is_valid_oeis_id("A09959"));
  CHECK(bfile_url("A099594") == "https://oeis.org/A099594/b099594.txt");
  FakeTransport t;
  TempDir cache("cache");
  OeisClient client(t, cache.path, default_fixture_dir());
  CHECK_THROWS_AS((void)client.fetch("X1", true), MalformedId);
}

TEST_CASE("b-file parsing") {
  const auto f = parse_bfile("A099594", kBody, FixtureSource::remote);
  CHECK(f.terms.size() == 10);
  CHECK(f.reader == "antidiagonal");
  CHECK_THROWS_AS((void)parse_bfile("A099594", "# nothing\n", FixtureSource::remote), NotFound);
}

TEST_CASE("offline fetch never touches the transport") {
  FakeTransport t;
  t.body = kBody;
  TempDir cache("cache");
  OeisClient client(t, cache.path, default_fixture_dir());
  const auto f = client.fetch("A099594", true);
  CHECK(f.source == FixtureSource::bundled);
  CHECK(t.urls.empty());
  CHECK(crosscheck_table(f, TableReader::antidiagonal, 21).status == CheckStatus::pass);
}

TEST_CASE("online fetch populates the cache") {
  FakeTransport t;
  t.body = kBody;
  TempDir cache("cache");
  TempDir empty("fixtures");
  OeisClient client(t, cache.path, empty.path);
  CHECK(client.fetch("A099594", false).source == FixtureSource::remote);
  CHECK(t.urls == std::vector<std::string>{"https://oeis.org/A099594/b099594.txt"});
  CHECK(fs::exists(cache.path / "b099594.txt"));
  const auto again = client.fetch("A099594", false);
  CHECK(again.source == FixtureSource::cache);
  CHECK(t.urls.size() == 1);
  CHECK(again.terms.size() == 10);
}

TEST_CASE("network failure without a local copy") {
  FakeTransport t;
  TempDir cache("cache");
  TempDir empty("fixtures");
  OeisClient client(t, cache.path, empty.path);
  CHECK_THROWS_AS((void)client.fetch("A099594", false), NetworkError);
  CHECK_THROWS_AS((void)client.fetch("A099594", true), NotFound);
  // Falls back to the bundled copy when the network fails.
  OeisClient bundled(t, cache.path, default_fixture_dir());
  CHECK(bundled.fetch("A099594", false).source == FixtureSource::bundled);
}

TEST_CASE("corrupted fixture fails with the first bad index") {
  auto f = parse_bfile("A099594", kBody, FixtureSource::bundled);
  f.terms[7] = 5;
  const CheckReport r = crosscheck_table(f, TableReader::antidiagonal, 21);
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.witness["index"] == 7);
  CHECK(r.witness["expected"] == "5");
  CHECK(r.witness["computed"] == "4");
}

TEST_CASE("reader layouts") {
  CHECK(arrange_table(TableReader::antidiagonal, 6) == std::vector<BigInt>{1, 1, 1, 1, 2, 1});
  // s = 2: rows k = 0, 1 of n = 0, 1.
  CHECK(arrange_table(TableReader::row, 4) == std::vector<BigInt>{1, 1, 1, 2});
  CHECK(parse_reader("row") == TableReader::row);
  CHECK_FALSE(parse_reader("column").has_value());
}

TEST_CASE("cache dir honours QPB_CACHE_DIR") {
  ::setenv("QPB_CACHE_DIR", "/tmp/qpb-explicit", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/qpb-explicit"));
  ::unsetenv("QPB_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/xdg/qpb"));
}
