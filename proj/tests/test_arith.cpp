#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubicfields/arith.hpp"

using namespace cubicfields;
using namespace cubicfields::arith;

namespace {

// Independent oracle for odd prime modulus: Euler's criterion.
int euler_symbol(i64 a, i64 p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  i64 r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// Definition-level fundamental check with a divisibility squarefree test,
// independent of factorize.
bool brute_fundamental(i64 d) {
  auto sqfree = [](i64 n) {
    if (n < 0) n = -n;
    for (i64 k = 2; k * k <= n; ++k)
      if (n % (k * k) == 0) return false;
    return true;
  };
  i64 m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return sqfree(d);
  if (m4 == 0) {
    i64 q = d / 4;
    i64 q4 = ((q % 4) + 4) % 4;
    return (q4 == 2 || q4 == 3) && sqfree(q);
  }
  return false;
}

}  // namespace

TEST_CASE("kronecker pinned values") {
  CHECK(kronecker(12, 5) == -1);   // Euler: 12^2 = 144 = 4 mod 5
  CHECK(kronecker(12, 13) == 1);
  CHECK(kronecker(12, 11) == 1);   // 12 = 1 mod 11
  CHECK(kronecker(0, 1) == 1);
  CHECK(kronecker(-7, 1) == 1);
  CHECK(kronecker(123456, 1) == 1);
  CHECK(kronecker(3, 2) == -1);
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(2, 2) == 0);
  CHECK(kronecker(-1, 3) == -1);
  CHECK(kronecker(0, 7) == 0);
  CHECK_THROWS_AS(kronecker(5, 0), std::domain_error);
}

TEST_CASE("kronecker vs Euler criterion for odd primes") {
  for (i64 p : primes_up_to(200)) {
    if (p == 2) continue;
    for (i64 a = -2 * p; a <= 2 * p; ++a) CHECK(kronecker(a, p) == euler_symbol(a, p));
  }
}

TEST_CASE("kronecker is multiplicative in both arguments") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> small(-400, 400), pos(1, 400);
  for (int trial = 0; trial < 4000; ++trial) {
    i64 a = small(rng), b = small(rng);
    i64 m = pos(rng), n = pos(rng);
    CHECK(kronecker(a, n) * kronecker(b, n) == kronecker(a * b, n));
    CHECK(kronecker(a, m) * kronecker(a, n) == kronecker(a, m * n));
  }
}

TEST_CASE("Euler products never contain p = 3") {
  for (i64 d = -2000; d <= 2000; ++d) {
    if (d == 0 || !is_fundamental(d)) continue;
    CHECK(kronecker(-3 * d, 3) == 0);
  }
}

TEST_CASE("is_fundamental pinned values and brute-force agreement") {
  CHECK(is_fundamental(1));
  CHECK(is_fundamental(-4));
  CHECK(is_fundamental(12));
  CHECK(is_fundamental(8));
  CHECK_FALSE(is_fundamental(9));
  CHECK(is_fundamental(-3));
  CHECK_FALSE(is_fundamental(2));
  CHECK_FALSE(is_fundamental(-1));
  CHECK_THROWS_AS(is_fundamental(0), std::domain_error);
  for (i64 d = -10000; d <= 10000; ++d) {
    if (d == 0) continue;
    CHECK(is_fundamental(d) == brute_fundamental(d));
  }
}

TEST_CASE("mirror pinned values and involution") {
  CHECK(FundamentalDiscriminant(-4).mirror().value() == 12);
  CHECK(FundamentalDiscriminant(-255).mirror().value() == 85);
  CHECK(FundamentalDiscriminant(-3).mirror().value() == 1);
  CHECK(FundamentalDiscriminant(1).mirror().value() == -3);
  CHECK(FundamentalDiscriminant(321).mirror().value() == -107);
  for (i64 d = -10000; d <= 10000; ++d) {
    if (d == 0 || !is_fundamental(d)) continue;
    FundamentalDiscriminant D(d);
    auto m = D.mirror();
    CHECK(m.mirror() == D);
    // exactly one of each mirror pair is divisible by 3
    CHECK(((D.value() % 3 == 0) ^ (m.value() % 3 == 0)));
  }
}

TEST_CASE("three_class matches the case split") {
  CHECK(FundamentalDiscriminant(-4).three_class() == ThreeClass::coprime);
  CHECK(FundamentalDiscriminant(-255).three_class() == ThreeClass::six_mod_nine);
  CHECK(FundamentalDiscriminant(-8751).three_class() == ThreeClass::six_mod_nine);
  CHECK(FundamentalDiscriminant(-34603).three_class() == ThreeClass::coprime);
  CHECK(FundamentalDiscriminant(321).three_class() == ThreeClass::six_mod_nine);
  CHECK(FundamentalDiscriminant(-3).three_class() == ThreeClass::six_mod_nine);
  CHECK(FundamentalDiscriminant(12).three_class() == ThreeClass::three_mod_nine);
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(6885) == std::vector<PrimePower>{{3, 4}, {5, 1}, {17, 1}});
  CHECK(factorize(103809) == std::vector<PrimePower>{{3, 1}, {34603, 1}});
  CHECK(factorize(2) == std::vector<PrimePower>{{2, 1}});
  CHECK_THROWS_AS(factorize(0), std::domain_error);
  for (i64 n = 1; n <= 3000; ++n) {
    i64 prod = 1;
    for (const auto& pe : factorize(n))
      for (int e = 0; e < pe.exponent; ++e) prod *= pe.prime;
    CHECK(prod == n);
  }
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(10) == std::vector<i64>{2, 3, 5, 7});
  // independent direct sieve for pi(100) = 25
  int direct = 0;
  for (int n = 2; n <= 100; ++n) {
    bool prime = true;
    for (int k = 2; k * k <= n; ++k)
      if (n % k == 0) prime = false;
    if (prime) ++direct;
  }
  CHECK(direct == 25);
  CHECK(primes_up_to(100).size() == 25);
}
