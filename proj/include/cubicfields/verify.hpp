#pragma once

#include <string>
#include <vector>

#include "cubicfields/int128.hpp"

namespace cubicfields::verify {

// Expected-vs-actual comparison over a declared scope; pass iff exact match.
struct SuiteReport {
  std::string name;
  std::string scope;
  bool pass = false;
  std::string detail;  // first discrepancy, or an informational summary
};

// forms.enumerate_classes vs hunter_enumerate as canonical-form multisets,
// both signs, |disc| <= bound.
SuiteReport forms_suite(i64 bound, unsigned workers);

// Series coefficients vs brute-force counts: every fundamental |D| <= dmax,
// every f with |D| f^2 <= discf2_bound. Exact.
SuiteReport phi_suite(i64 dmax, i64 discf2_bound, unsigned workers);

// count_sextic vs direct_sextic at X = 1e4, 1e5, ..., xmax, both signs.
SuiteReport sextic_suite(i128 xmax, unsigned workers);

// v3(disc) value-set check over all classes with |disc| <= bound, both signs;
// detail reports the empirical v3 proportions (informational).
SuiteReport valuations_suite(i64 bound, unsigned workers);

}  // namespace cubicfields::verify
