#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cubicfields/errors.hpp"
#include "cubicfields/tableio.hpp"

using namespace cubicfields;
using namespace cubicfields::tableio;

namespace {

long line_of(const parse_error& e) { return e.line; }

std::string emit_to_string(const fields::CubicFieldStore& store) {
  std::ostringstream os;
  emit_table(store, os);
  return os.str();
}

}  // namespace

TEST_CASE("round trip is byte identical") {
  auto store = fields::CubicFieldStore::from_enumeration(4000, 4000);
  std::string once = emit_to_string(store);
  std::istringstream in(once);
  auto reparsed = parse_table(in);
  CHECK(reparsed.size() == store.size());
  CHECK(emit_to_string(reparsed) == once);
}

TEST_CASE("header only is an empty store") {
  std::istringstream in("# cubicfields v1\n");
  auto store = parse_table(in);
  CHECK(store.size() == 0);
}

TEST_CASE("single record") {
  std::istringstream in("# cubicfields v1\n49\t1\t1\t-2\t-1\n");
  auto store = parse_table(in);
  REQUIRE(store.size() == 1);
  CHECK(store.lookup(49).size() == 1);
  CHECK(store.coverage(forms::Sign::positive) == 49);
  CHECK(store.coverage(forms::Sign::negative) == 0);
}

TEST_CASE("malformed inputs carry line numbers") {
  auto expect_line = [](const std::string& text, long line) {
    std::istringstream in(text);
    try {
      parse_table(in);
      FAIL_CHECK("expected parse_error for: " << text);
    } catch (const parse_error& e) {
      CHECK(line_of(e) == line);
    }
  };
  expect_line("# wrong header\n", 1);
  expect_line("", 1);
  // disc mismatch
  expect_line("# cubicfields v1\n50\t1\t1\t-2\t-1\n", 2);
  // non-canonical (unreduced) but correct disc: translate of the 49 form
  expect_line("# cubicfields v1\n49\t1\t4\t3\t-1\n", 2);
  // field count
  expect_line("# cubicfields v1\n49\t1\t1\t-2\n", 2);
  expect_line("# cubicfields v1\n49\t1\t1\t-2\t-1\t7\n", 2);
  // whitespace instead of tabs
  expect_line("# cubicfields v1\n49 1 1 -2 -1\n", 2);
  // duplicate and unsorted
  expect_line("# cubicfields v1\n49\t1\t1\t-2\t-1\n49\t1\t1\t-2\t-1\n", 3);
  expect_line("# cubicfields v1\n81\t1\t3\t0\t-1\n49\t1\t1\t-2\t-1\n", 3);
  // CR line ending
  expect_line("# cubicfields v1\n49\t1\t1\t-2\t-1\r\n", 2);
  // leading zero / junk integers
  expect_line("# cubicfields v1\n049\t1\t1\t-2\t-1\n", 2);
  expect_line("# cubicfields v1\n49\t1\t+1\t-2\t-1\n", 2);
  // blank line
  expect_line("# cubicfields v1\n\n49\t1\t1\t-2\t-1\n", 2);
  // reducible form with disc matching
  expect_line("# cubicfields v1\n4\t0\t1\t0\t-1\n", 2);
}

TEST_CASE("loose ingest normalizes posed polynomials") {
  // x^3 - 138x + 413 (index 5 at the polynomial level) and a comment line
  std::string text =
      "# external table\n"
      "\n"
      "1 0 -138 413\n"
      "0 -129 -532\n";
  std::istringstream in(text);
  auto store = ingest_loose(in, IngestKind::polynomials, CoeffOrder::leading_first, 0, 240000);
  REQUIRE(store.size() == 2);
  for (const auto& e : store.all()) CHECK(e.discriminant == 236277);
}

TEST_CASE("loose ingest of forms with declared discriminants") {
  std::istringstream in("49\t1\t1\t-2\t-1\n-23 1 1 2 1\n");
  auto store = ingest_loose(in, IngestKind::forms, CoeffOrder::leading_first, 23, 49);
  CHECK(store.size() == 2);
  std::istringstream bad("50 1 1 -2 -1\n");
  CHECK_THROWS_AS(ingest_loose(bad, IngestKind::forms, CoeffOrder::leading_first, 0, 0),
                  parse_error);
}

TEST_CASE("loose ingest constant-first order") {
  // same polynomial x^3 - 12x - 1 written constant-first
  std::istringstream in("-1 -12 0 1\n");
  auto store = ingest_loose(in, IngestKind::polynomials, CoeffOrder::constant_first, 0, 6885);
  REQUIRE(store.size() == 1);
  CHECK(store.all()[0].discriminant == 6885);
}

TEST_CASE("obtain_store caches and reuses tables") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "cubicfields_cache_test";
  fs::remove_all(dir);
  auto s1 = obtain_store(2000, 0, 2, dir.string());
  CHECK(fs::exists(dir / "cubics-neg-2000-v1.tsv"));
  CHECK(fs::exists(dir / "cubics-neg-2000-v1.tsv.manifest"));
  auto mtime = fs::last_write_time(dir / "cubics-neg-2000-v1.tsv");
  auto s2 = obtain_store(2000, 0, 2, dir.string());
  CHECK(fs::last_write_time(dir / "cubics-neg-2000-v1.tsv") == mtime);
  CHECK(s1.size() == s2.size());
  // a corrupted cache is regenerated rather than trusted
  {
    std::ofstream f(dir / "cubics-neg-2000-v1.tsv", std::ios::binary);
    f << "# cubicfields v1\ngarbage\n";
  }
  auto s3 = obtain_store(2000, 0, 2, dir.string());
  CHECK(s3.size() == s1.size());
  fs::remove_all(dir);
}
