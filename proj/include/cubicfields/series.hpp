#pragma once

#include <functional>
#include <vector>

#include "cubicfields/arith.hpp"
#include "cubicfields/fields.hpp"

namespace cubicfields::series {

// t0 + t1/3^s + t2/3^(2s); every table row has t0 = 1.
struct ThreeAdicFactor {
  i64 t0 = 1, t1 = 0, t2 = 0;
  bool operator==(const ThreeAdicFactor&) const = default;
};

// 1 if D = 1 or D < -3; 3 if D = -3 or D > 1.
i64 c_constant(const arith::FundamentalDiscriminant& D);

// Main-term 3-adic factor, by the class of D mod 9.
ThreeAdicFactor m1_factor(const arith::FundamentalDiscriminant& D);

// Per-field 3-adic factor; E must lie in L_{D*} or L_{-27D}.
ThreeAdicFactor m2_factor(const arith::FundamentalDiscriminant& D, const fields::CubicField& E);

// Coefficients (index 1..flimit, slot 0 unused) of
// prod_{p <= flimit, (-3D/p) = 1} (1 + omega(p)/p^s): multiplicative, supported
// on squarefree products of admissible primes.
std::vector<i64> euler_expand(const arith::FundamentalDiscriminant& D,
                              const std::function<int(i64)>& omega_at, i64 flimit);

// Exact scaled coefficients of Phi_D: scaled[f] = 2 c_D [f^{-s}] Phi_D.
struct CoeffSeries {
  arith::FundamentalDiscriminant D;
  i64 flimit = 0;
  i64 scale = 0;  // 2 c_D
  std::vector<i64> scaled;  // index 1..flimit

  // N_f = #{K : disc K = D f^2}; the f = 1 slot sheds the constant c_D.
  std::vector<i64> counts() const;
  i64 count_sum() const;
};

CoeffSeries phi_coefficients(const arith::FundamentalDiscriminant& D, i64 flimit,
                             const fields::CubicFieldStore& store);

}  // namespace cubicfields::series
