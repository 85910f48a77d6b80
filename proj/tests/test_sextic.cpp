#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicfields/errors.hpp"
#include "cubicfields/oracle.hpp"
#include "cubicfields/sextic.hpp"
#include "cubicfields/verify.hpp"

using namespace cubicfields;
using namespace cubicfields::sextic;

TEST_CASE("edge cases") {
  auto store = fields::CubicFieldStore::from_enumeration(200, 200);
  for (auto sign : {forms::Sign::positive, forms::Sign::negative}) {
    auto t = count_sextic(1, sign, store);
    CHECK(t.total == 0);
  }
  CHECK_THROWS_AS(count_sextic(0, forms::Sign::positive, store), std::invalid_argument);
  // coverage shortfall
  CHECK_THROWS_AS(count_sextic(1'000'000'000, forms::Sign::positive, store), coverage_error);
}

TEST_CASE("required_coverage") {
  CHECK(required_coverage(1) == 0);
  CHECK(required_coverage(28) == 81);   // |D| = 3 qualifies since 27 < 28
  CHECK(required_coverage(27) == 54);   // 27 < 27 fails, largest |D| is 2
  CHECK(required_coverage(1'000'000) == 27 * 99);
}

TEST_CASE("strict inequality at the bound") {
  // Disc(Ktilde) = D^3 f^4; the smallest positive case is D = 5, f = 1,
  // Disc = 125 (no cubic field of disc 5 though). Use D = -3, f = 6:
  // Disc(Ktilde) = (-3)^3 * 6^4 = -34992, from the field x^3 - 2.
  auto store = fields::CubicFieldStore::from_enumeration(1000, 1000);
  i64 at = count_sextic(34992, forms::Sign::negative, store).total;
  i64 above = count_sextic(34993, forms::Sign::negative, store).total;
  CHECK(above == at + 1);
}

TEST_CASE("breakdown sums to the total and is monotone") {
  i64 cov = required_coverage(100'000'000);
  auto store = fields::CubicFieldStore::from_enumeration(cov, cov);
  i64 prev = -1;
  for (i128 x : {i128(10'000), i128(1'000'000), i128(100'000'000)}) {
    auto t = count_sextic(x, forms::Sign::negative, store, /*with_breakdown=*/true);
    REQUIRE(t.breakdown.has_value());
    i64 sum = 0;
    for (const auto& [d, n] : *t.breakdown) {
      CHECK(d < 0);
      CHECK(arith::is_fundamental(d));
      CHECK(d != 1);
      sum += n;
    }
    CHECK(sum == t.total);
    CHECK(t.total >= prev);
    prev = t.total;
  }
}

TEST_CASE("agrees with the direct oracle through 1e7") {
  auto rep = verify::sextic_suite(10'000'000, 2);
  INFO(rep.detail);
  CHECK(rep.pass);
}

TEST_CASE("worker count does not change the tally") {
  i64 cov = required_coverage(10'000'000);
  auto store = fields::CubicFieldStore::from_enumeration(cov, cov);
  auto one = count_sextic(10'000'000, forms::Sign::negative, store, true, 1);
  auto four = count_sextic(10'000'000, forms::Sign::negative, store, true, 4);
  CHECK(one.total == four.total);
  CHECK(*one.breakdown == *four.breakdown);
}
