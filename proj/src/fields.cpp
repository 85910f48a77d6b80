#include "cubicfields/fields.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubicfields/errors.hpp"

namespace cubicfields::fields {

namespace {

i64 abs64(i64 v) { return v < 0 ? -v : v; }

struct FieldOrder {
  bool operator()(const CubicField& x, const CubicField& y) const {
    i64 ax = abs64(x.discriminant), ay = abs64(y.discriminant);
    if (ax != ay) return ax < ay;
    if (x.discriminant != y.discriminant) return x.discriminant < y.discriminant;
    return x.form < y.form;
  }
};

}  // namespace

CubicField make_field(const forms::BinaryCubicForm& form, bool validate) {
  i64 d = forms::disc(form);
  if (validate) {
    if (d == 0) throw std::domain_error("make_field: zero discriminant");
    if (!forms::is_primitive(form)) throw std::domain_error("make_field: imprimitive form");
    if (!forms::is_irreducible(form)) throw std::domain_error("make_field: reducible form");
    if (!forms::is_reduced(form)) throw std::domain_error("make_field: non-canonical form");
    if (!forms::is_maximal(form)) throw std::domain_error("make_field: non-maximal form");
  }
  return {form, d, MonicCubic{form.b, form.a * form.c, form.a * form.a * form.d}};
}

std::pair<arith::FundamentalDiscriminant, i64> resolvent_decompose(i64 disc) {
  if (disc == 0) throw std::domain_error("resolvent_decompose: zero discriminant");
  i64 n = abs64(disc);
  i64 square_root_part = 1, kernel = 1;
  for (const auto& pe : arith::factorize(n)) {
    for (int e = 0; e + 1 < pe.exponent; e += 2) square_root_part *= pe.prime;
    if (pe.exponent % 2 == 1) kernel *= pe.prime;
  }
  i64 d0 = disc < 0 ? -kernel : kernel;
  if (((d0 % 4) + 4) % 4 == 1)
    return {arith::FundamentalDiscriminant(d0), square_root_part};
  if (square_root_part % 2 == 0)
    return {arith::FundamentalDiscriminant(4 * d0), square_root_part / 2};
  throw std::domain_error("resolvent_decompose: not a cubic field discriminant");
}

int omega(const CubicField& E, i64 p) {
  const auto& f = E.form;
  i64 a = ((f.a % p) + p) % p, b = ((f.b % p) + p) % p;
  i64 c = ((f.c % p) + p) % p, d = ((f.d % p) + p) % p;
  int roots = 0;
  for (i64 r = 0; r < p; ++r)
    if (((((a * r + b) % p) * r + c) % p * r + d) % p == 0) ++roots;
  if (a == 0) ++roots;  // (1:0)
  if (roots == 3) return 2;
  return roots == 0 ? -1 : 0;
}

bool is_isomorphic(const CubicField& e1, const CubicField& e2) {
  return e1.form == e2.form;
}

CubicFieldStore CubicFieldStore::from_enumeration(i64 coverage_neg, i64 coverage_pos,
                                                  unsigned workers) {
  std::vector<CubicField> fields;
  for (auto [sign, cov] : {std::pair{forms::Sign::negative, coverage_neg},
                           std::pair{forms::Sign::positive, coverage_pos}}) {
    if (cov <= 0) continue;
    forms::EnumerationRequest req;
    req.min_abs_disc = 1;
    req.max_abs_disc = cov;
    req.sign = sign;
    for (const auto& f : forms::enumerate_classes(req, workers))
      fields.push_back(make_field(f, /*validate=*/false));
  }
  return from_fields(std::move(fields), coverage_neg, coverage_pos);
}

CubicFieldStore CubicFieldStore::from_fields(std::vector<CubicField> fields, i64 coverage_neg,
                                             i64 coverage_pos) {
  CubicFieldStore store;
  store.fields_ = std::move(fields);
  std::sort(store.fields_.begin(), store.fields_.end(), FieldOrder{});
  store.cov_neg_ = coverage_neg;
  store.cov_pos_ = coverage_pos;
  return store;
}

std::vector<CubicField> CubicFieldStore::lookup(i64 disc) const {
  if (disc == 0) throw std::domain_error("lookup: zero discriminant");
  i64 cov = disc < 0 ? cov_neg_ : cov_pos_;
  if (abs64(disc) > cov)
    throw coverage_error("store covers |disc| <= " + std::to_string(cov) +
                         " for this sign, requested " + std::to_string(disc));
  CubicField probe;
  probe.discriminant = disc;
  probe.form = {0, 0, 0, 0};
  auto lo = std::lower_bound(fields_.begin(), fields_.end(), probe, FieldOrder{});
  std::vector<CubicField> out;
  for (auto it = lo; it != fields_.end() && it->discriminant == disc; ++it) out.push_back(*it);
  return out;
}

FieldInventory inventory(const arith::FundamentalDiscriminant& D, const CubicFieldStore& store) {
  i64 mirror_disc = D.mirror().value();
  i64 neg27 = -27 * D.value();
  FieldInventory inv{D, store.lookup(mirror_disc), store.lookup(neg27)};

  // (3^r - 1)/2 fields at D*, and 0 or 3^r at -27D.
  i64 n0 = static_cast<i64>(inv.mirror_fields.size());
  i64 n27 = static_cast<i64>(inv.neg27_fields.size());
  i64 pow3 = 2 * n0 + 1;  // must be 3^r
  i64 t = pow3;
  while (t % 3 == 0) t /= 3;
  if (t != 1 || (n27 != 0 && n27 != pow3))
    throw std::logic_error("inventory counts (" + std::to_string(n0) + ", " +
                           std::to_string(n27) + ") for D = " + std::to_string(D.value()) +
                           " break the (3^r-1)/2 / 3^r pattern; store is inconsistent");
  return inv;
}

}  // namespace cubicfields::fields
