#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cubicfields/errors.hpp"
#include "cubicfields/fields.hpp"
#include "cubicfields/forms.hpp"

using namespace cubicfields;
using namespace cubicfields::fields;

namespace {

CubicField field_of_poly(i64 c2, i64 c1, i64 c0) {
  forms::BinaryCubicForm f{1, c2, c1, c0};
  return make_field(forms::reduce(forms::maximalize(f)));
}

}  // namespace

TEST_CASE("resolvent_decompose") {
  auto [d1, f1] = resolvent_decompose(49);
  CHECK(d1.value() == 1);
  CHECK(f1 == 7);

  auto [d2, f2] = resolvent_decompose(-78759);
  CHECK(d2.value() == -8751);
  CHECK(f2 == 3);

  auto [d3, f3] = resolvent_decompose(2917);
  CHECK(d3.value() == 2917);
  CHECK(f3 == 1);

  auto [d4, f4] = resolvent_decompose(-4);
  CHECK(d4.value() == -4);
  CHECK(f4 == 1);

  auto [d5, f5] = resolvent_decompose(-108);
  CHECK(d5.value() == -3);
  CHECK(f5 == 6);

  CHECK_THROWS_AS(resolvent_decompose(0), std::domain_error);
  // 2 = D f^2 has no fundamental solution
  CHECK_THROWS_AS(resolvent_decompose(2), std::domain_error);
}

TEST_CASE("omega splitting symbols") {
  // L321: x^3 - x^2 - 4x + 1
  CubicField l321 = field_of_poly(-1, -4, 1);
  CHECK(l321.discriminant == 321);
  CHECK(omega(l321, 2) == -1);  // irreducible mod 2
  CHECK(omega(l321, 7) == 0);   // (321/7) = -1 forces 0
  CHECK(omega(l321, 3) == 0);   // 3 | 321, ramified

  // cyclic field of disc 49: x^3 + x^2 - 2x - 1; 13 factors completely
  CubicField c49 = field_of_poly(1, -2, -1);
  CHECK(c49.discriminant == 49);
  CHECK(omega(c49, 13) == 2);   // roots 7, 8, 10 mod 13
  CHECK(omega(c49, 7) == 0);    // ramified
  CHECK(omega(c49, 2) == -1);

  // omega vanishes iff kronecker(disc, p) != 1 (p coprime to disc)
  for (const CubicField& e : {l321, c49})
    for (i64 p : arith::primes_up_to(100)) {
      int w = omega(e, p);
      if (e.discriminant % p != 0)
        CHECK((w == 0) == (arith::kronecker(e.discriminant, p) != 1));
      else
        CHECK(w == 0);
    }
}

TEST_CASE("is_isomorphic") {
  CubicField a = field_of_poly(0, -138, 413);
  CubicField b = field_of_poly(0, -129, -532);
  CHECK(a.discriminant == 236277);
  CHECK(b.discriminant == 236277);
  CHECK(is_isomorphic(a, a));
  CHECK_FALSE(is_isomorphic(a, b));
  // a GL2(Z)-transform of the defining form lands on the same class
  forms::BinaryCubicForm t = forms::translate(a.form, 2);
  CubicField a2 = make_field(forms::reduce(t));
  CHECK(is_isomorphic(a, a2));
}

TEST_CASE("store lookup and coverage") {
  auto store = CubicFieldStore::from_enumeration(300, 300);
  CHECK(store.lookup(-23).size() == 1);
  CHECK(store.lookup(-31).size() == 1);
  CHECK(store.lookup(49).size() == 1);
  CHECK(store.lookup(-24).empty());
  CHECK_THROWS_AS(store.lookup(-301), coverage_error);
  CHECK_THROWS_AS(store.lookup(301), coverage_error);
  CHECK_THROWS_AS(store.lookup(0), std::domain_error);
}

TEST_CASE("inventory for small discriminants") {
  // D = -4: no fields of disc 12 or 108
  auto store = CubicFieldStore::from_enumeration(200, 200);
  arith::FundamentalDiscriminant m4(-4);
  auto inv = inventory(m4, store);
  CHECK(inv.mirror_fields.empty());
  CHECK(inv.neg27_fields.empty());

  // D = -3: L_1 empty, L_81 has the cyclic field of conductor 9
  arith::FundamentalDiscriminant m3(-3);
  auto inv3 = inventory(m3, store);
  CHECK(inv3.mirror_fields.empty());
  REQUIRE(inv3.neg27_fields.size() == 1);
  CHECK(inv3.neg27_fields[0].discriminant == 81);

  // D = 5: one field of disc -135, none of disc -15
  arith::FundamentalDiscriminant five(5);
  auto inv5 = inventory(five, store);
  CHECK(inv5.mirror_fields.empty());
  CHECK(inv5.neg27_fields.size() == 1);

  // insufficient coverage -> coverage_error
  arith::FundamentalDiscriminant big(-104);
  CHECK_THROWS_AS(inventory(big, store), coverage_error);
}

TEST_CASE("inventory of D = -8751 matches the worked example") {
  auto store = CubicFieldStore::from_enumeration(0, 240000);
  arith::FundamentalDiscriminant d(-8751);
  auto inv = inventory(d, store);
  CHECK(inv.mirror_fields.size() == 1);
  CHECK(inv.neg27_fields.size() == 3);
  CHECK(inv.mirror_fields[0].discriminant == 2917);
  for (const auto& e : inv.neg27_fields) CHECK(e.discriminant == 236277);
}

TEST_CASE("poly attached to a field is the characteristic polynomial of a*theta") {
  auto store = CubicFieldStore::from_enumeration(50, 0);
  auto f23 = store.lookup(-23);
  REQUIRE(f23.size() == 1);
  const auto& form = f23[0].form;
  MonicCubic poly = f23[0].poly;
  CHECK(poly.c2 == form.b);
  CHECK(poly.c1 == form.a * form.c);
  CHECK(poly.c0 == form.a * form.a * form.d);
}
