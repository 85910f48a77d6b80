#pragma once

#include <utility>
#include <vector>

#include "cubicfields/arith.hpp"
#include "cubicfields/forms.hpp"

namespace cubicfields::fields {

// y^3 + c2 y^2 + c1 y + c0
struct MonicCubic {
  i64 c2 = 0, c1 = 0, c0 = 0;
  bool operator==(const MonicCubic&) const = default;
};

// Isomorphism class of a cubic field: canonical reduced maximal form plus
// derived data. poly is the characteristic polynomial of a*theta.
struct CubicField {
  forms::BinaryCubicForm form;
  i64 discriminant = 0;
  MonicCubic poly;
};

// Builds a CubicField from a canonical form. With validate, checks that the
// form is reduced, primitive, irreducible and maximal.
CubicField make_field(const forms::BinaryCubicForm& form, bool validate = true);

// disc = D f^2 with D fundamental, f > 0; unique. Throws std::domain_error if
// disc is 0 or not of that shape.
std::pair<arith::FundamentalDiscriminant, i64> resolvent_decompose(i64 disc);

// Splitting symbol of p in E: 2 totally split, -1 inert, 0 otherwise, read off
// the root pattern of the canonical form in P^1(F_p).
int omega(const CubicField& E, i64 p);

bool is_isomorphic(const CubicField& e1, const CubicField& e2);

// Queryable map disc -> cubic fields, with per-sign coverage bounds.
class CubicFieldStore {
 public:
  CubicFieldStore() = default;

  // Coverage 0 means "no fields of that sign requested".
  static CubicFieldStore from_enumeration(i64 coverage_neg, i64 coverage_pos,
                                          unsigned workers = 1);
  static CubicFieldStore from_fields(std::vector<CubicField> fields, i64 coverage_neg,
                                     i64 coverage_pos);

  // All fields of the exact discriminant; coverage_error if |disc| exceeds the
  // coverage for the sign of disc.
  std::vector<CubicField> lookup(i64 disc) const;

  i64 coverage(forms::Sign s) const { return s == forms::Sign::negative ? cov_neg_ : cov_pos_; }
  // Sorted by (|disc|, disc, a, b, c, d).
  const std::vector<CubicField>& all() const { return fields_; }
  size_t size() const { return fields_.size(); }

 private:
  std::vector<CubicField> fields_;
  i64 cov_neg_ = 0, cov_pos_ = 0;
};

// L_{D*} and L_{-27D}. Construction enforces the counting pattern
// (|L_{D*}|, |L_{-27D}|) = ((3^r - 1)/2, 0 or 3^r); a violation signals an
// incomplete store or an enumeration bug.
struct FieldInventory {
  arith::FundamentalDiscriminant D;
  std::vector<CubicField> mirror_fields;
  std::vector<CubicField> neg27_fields;
};

FieldInventory inventory(const arith::FundamentalDiscriminant& D, const CubicFieldStore& store);

}  // namespace cubicfields::fields
