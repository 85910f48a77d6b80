#pragma once

#include <map>
#include <optional>

#include "cubicfields/fields.hpp"
#include "cubicfields/series.hpp"

namespace cubicfields::sextic {

struct SexticTally {
  i128 bound = 0;
  forms::Sign sign = forms::Sign::positive;
  i64 total = 0;
  std::optional<std::map<i64, i64>> breakdown;  // D -> partial count
};

// Cubic-field coverage needed for count_sextic(X, sign): fields of the
// opposite discriminant sign with |disc| up to 27 * max{|D| : |D|^3 < X}.
i64 required_coverage(i128 X);

// #{S3-sextic fields Ktilde : 0 < ±Disc(Ktilde) < X}, both inequalities
// strict, via partial sums of the resolvent series over fundamental D.
// D = 1 never contributes (cyclic cubics are not S3).
SexticTally count_sextic(i128 X, forms::Sign sign, const fields::CubicFieldStore& store,
                         bool with_breakdown = false, unsigned workers = 1);

}  // namespace cubicfields::sextic
