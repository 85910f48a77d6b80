#include "cubicfields/arith.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "cubicfields/errors.hpp"

namespace cubicfields::arith {

int kronecker(i64 a, i64 n) {
  if (n == 0) throw std::domain_error("kronecker: modulus must be nonzero");
  int k = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int twos = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++twos;
    }
    if (twos % 2 == 1) {
      int am8 = static_cast<int>(((a % 8) + 8) % 8);
      if (am8 == 3 || am8 == 5) k = -k;
    }
  }
  // n odd and positive; (a/n) depends only on a mod n.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int nm8 = static_cast<int>(n % 8);
      if (nm8 == 3 || nm8 == 5) k = -k;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    a %= n;
  }
  return n == 1 ? k : 0;
}

namespace {

std::vector<i64> sieve_to(i64 bound) {
  std::vector<i64> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
  for (i64 p = 2; p * p <= bound; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    for (i64 m = p * p; m <= bound; m += p) composite[static_cast<size_t>(m)] = true;
  }
  for (i64 p = 2; p <= bound; ++p)
    if (!composite[static_cast<size_t>(p)]) primes.push_back(p);
  return primes;
}

std::mutex cache_mu;
std::shared_ptr<const std::vector<i64>> cache_primes;
i64 cache_bound = 0;

// Grown under a mutex; readers hold a shared_ptr snapshot, so concurrent reads
// after initialization never race with growth.
std::shared_ptr<const std::vector<i64>> shared_primes(i64 bound) {
  std::lock_guard<std::mutex> lock(cache_mu);
  if (bound > cache_bound) {
    i64 target = std::max<i64>({bound, 2 * cache_bound, 1 << 12});
    cache_primes = std::make_shared<const std::vector<i64>>(sieve_to(target));
    cache_bound = target;
  }
  return cache_primes;
}

bool squarefree(i64 n) {
  for (const auto& pe : factorize(n))
    if (pe.exponent >= 2) return false;
  return true;
}

}  // namespace

std::vector<i64> primes_up_to(i64 bound) {
  if (bound < 0) throw std::domain_error("primes_up_to: bound must be nonnegative");
  if (bound < 2) return {};
  auto primes = shared_primes(bound);
  auto end = std::upper_bound(primes->begin(), primes->end(), bound);
  return std::vector<i64>(primes->begin(), end);
}

std::vector<PrimePower> factorize(i64 n) {
  if (n < 1) throw std::domain_error("factorize: input must be positive");
  std::vector<PrimePower> out;
  if (n == 1) return out;
  constexpr i64 kTrialLimit = 2'000'000;
  i64 root = static_cast<i64>(isqrt(n));
  auto primes = shared_primes(std::min(root, kTrialLimit));
  for (i64 p : *primes) {
    if (p > root) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
    root = static_cast<i64>(isqrt(n));
  }
  if (n > 1) {
    if (n > kTrialLimit * kTrialLimit)
      throw limit_error("factorize: cofactor beyond trial-division range");
    out.push_back({n, 1});
  }
  return out;
}

bool is_fundamental(i64 d) {
  if (d == 0) throw std::domain_error("is_fundamental: zero is not a discriminant");
  i64 m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return squarefree(d < 0 ? -d : d);
  if (m4 == 0) {
    i64 q = d / 4;
    i64 q4 = ((q % 4) + 4) % 4;
    if (q4 != 2 && q4 != 3) return false;
    return squarefree(q < 0 ? -q : q);
  }
  return false;
}

FundamentalDiscriminant::FundamentalDiscriminant(i64 v) : value_(v) {
  if (!is_fundamental(v))
    throw std::domain_error("not a fundamental discriminant: " + std::to_string(v));
}

ThreeClass FundamentalDiscriminant::three_class() const {
  i64 m = ((value_ % 9) + 9) % 9;
  if (m % 3 != 0) return ThreeClass::coprime;
  if (m == 3) return ThreeClass::three_mod_nine;
  if (m == 6) return ThreeClass::six_mod_nine;
  throw std::logic_error("fundamental discriminant divisible by 9");
}

FundamentalDiscriminant FundamentalDiscriminant::mirror() const {
  if (value_ % 3 == 0) return FundamentalDiscriminant(-(value_ / 3));
  return FundamentalDiscriminant(-3 * value_);
}

}  // namespace cubicfields::arith
