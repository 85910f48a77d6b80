#pragma once

#include <vector>

#include "cubicfields/int128.hpp"

namespace cubicfields::arith {

// Kronecker symbol (a/n) with the standard conventions at 2, -1 and n = 1.
// Fully multiplicative in both arguments. Throws std::domain_error if n == 0.
int kronecker(i64 a, i64 n);

// True iff d is a quadratic field discriminant or 1: d ≡ 1 (mod 4) squarefree,
// or d = 4m with m squarefree and m ≡ 2, 3 (mod 4). Throws on d == 0.
bool is_fundamental(i64 d);

// All primes <= bound, ascending.
std::vector<i64> primes_up_to(i64 bound);

struct PrimePower {
  i64 prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

// Exact factorization by trial division, n >= 1. factorize(1) is empty.
std::vector<PrimePower> factorize(i64 n);

// Splitting of the tame 3-adic behaviour of a fundamental discriminant.
// Fundamental discriminants are never ≡ 0 (mod 9), so the three cases are
// exhaustive.
enum class ThreeClass { coprime, three_mod_nine, six_mod_nine };

class FundamentalDiscriminant {
 public:
  // Validates; throws std::domain_error if v is not fundamental.
  explicit FundamentalDiscriminant(i64 v);

  i64 value() const { return value_; }
  ThreeClass three_class() const;

  // Discriminant of the mirror field Q(sqrt(-3D)): -3D if 3∤D, -D/3 if 3|D.
  FundamentalDiscriminant mirror() const;

  bool operator==(const FundamentalDiscriminant&) const = default;
  auto operator<=>(const FundamentalDiscriminant&) const = default;

 private:
  i64 value_;
};

inline FundamentalDiscriminant mirror(const FundamentalDiscriminant& d) { return d.mirror(); }

}  // namespace cubicfields::arith
