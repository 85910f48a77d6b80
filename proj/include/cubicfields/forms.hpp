#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "cubicfields/int128.hpp"

namespace cubicfields::forms {

// Integral binary cubic form a x^3 + b x^2 y + c x y^2 + d y^3.
struct BinaryCubicForm {
  i64 a = 0, b = 0, c = 0, d = 0;
  auto operator<=>(const BinaryCubicForm&) const = default;
};

enum class Sign { positive, negative };
inline Sign opposite(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

// 18abcd + b^2 c^2 - 4ac^3 - 4b^3 d - 27 a^2 d^2, evaluated in 128 bits.
i128 disc_wide(const BinaryCubicForm& f);
// Same, narrowed to 64 bits; throws std::overflow_error if it does not fit.
i64 disc(const BinaryCubicForm& f);

// GL_2(Z) moves used by reduction and by the test-side orbit oracle.
BinaryCubicForm translate(const BinaryCubicForm& f, i64 k);  // f(x + k y, y)
BinaryCubicForm swap_xy(const BinaryCubicForm& f);           // f(y, x)
BinaryCubicForm flip_x(const BinaryCubicForm& f);            // f(-x, y)
BinaryCubicForm flip_y(const BinaryCubicForm& f);            // f(x, -y)

// True iff f is the canonical representative of its class under the Belabas
// reduction conventions (Hessian reduction for disc > 0, Mathews-style for
// disc < 0, with the standard tie-breaks). Throws std::domain_error if
// disc(f) == 0.
bool is_reduced(const BinaryCubicForm& f);

// Canonical representative of the class of f. Pre: f irreducible, disc != 0.
BinaryCubicForm reduce(BinaryCubicForm f);

bool is_primitive(const BinaryCubicForm& f);

// Irreducibility over Q via rational roots; a reducible cubic form has a
// linear factor.
bool is_irreducible(const BinaryCubicForm& f);

// Davenport-Heilbronn maximality criterion at p: false iff f mod p has a
// multiple root rbar in P^1(F_p) with p^2 | f(r,1) for a lift r (finite case)
// or p^2 | a (root at infinity). Pre: f primitive, irreducible.
bool is_maximal_at(const BinaryCubicForm& f, i64 p);

// Maximality at every prime p with p^2 | disc(f).
bool is_maximal(const BinaryCubicForm& f);

// One index-lowering step at p (|disc| shrinks by p^2, up to content).
// Pre: !is_maximal_at(f, p).
BinaryCubicForm strip_at(BinaryCubicForm f, i64 p);

// Form of the maximal cubic ring containing R(f): strips every index prime.
// Pre: f irreducible.
BinaryCubicForm maximalize(BinaryCubicForm f);

struct EnumerationRequest {
  i64 min_abs_disc = 1;
  i64 max_abs_disc = 0;
  Sign sign = Sign::negative;
  // Optional discriminant predicate, e.g. "disc = D f^2 for a fixed D".
  std::function<bool(i64)> disc_filter;
};

// One canonical form per isomorphism class of cubic field with
// min <= |disc| <= max and the requested sign, sorted by
// (|disc|, a, b, c, d). Deterministic for any worker count.
std::vector<BinaryCubicForm> enumerate_classes(const EnumerationRequest& req,
                                               unsigned workers = 1);

}  // namespace cubicfields::forms
