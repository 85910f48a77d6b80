#pragma once

#include <string>
#include <vector>

#include "cubicfields/fields.hpp"

namespace cubicfields::oracle {

// Brute-force verifiers, independent of the enumeration fast path: monic
// cubics from Hunter-style coefficient boxes, maximality by the Dedekind
// criterion, canonicalization (only) shared with forms::reduce.

// Dedekind's test: is Z[y]/(f) maximal at p?
bool dedekind_maximal_at(const fields::MonicCubic& f, i64 p);

// One representative per isomorphism class with |disc(field)| <= bound of the
// given sign. bound <= 1e6 (declared desk-scale limit).
std::vector<fields::CubicField> hunter_enumerate(i64 bound, forms::Sign sign);

// counts[f] = #{classes with disc = D f^2} from hunter_enumerate, f = 1..flimit.
std::vector<i64> direct_count_by_f(const arith::FundamentalDiscriminant& D, i64 flimit);

// Direct S3-sextic count by enumerating cubic fields to |disc| <= sqrt(X),
// decomposing, and filtering. X <= 1e9.
i64 direct_sextic(i128 X, forms::Sign sign);

}  // namespace cubicfields::oracle
