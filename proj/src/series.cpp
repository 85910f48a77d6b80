#include "cubicfields/series.hpp"

#include <stdexcept>

namespace cubicfields::series {

using arith::ThreeClass;

i64 c_constant(const arith::FundamentalDiscriminant& D) {
  return (D.value() == 1 || D.value() < -3) ? 1 : 3;
}

ThreeAdicFactor m1_factor(const arith::FundamentalDiscriminant& D) {
  switch (D.three_class()) {
    case ThreeClass::coprime: return {1, 0, 2};
    case ThreeClass::three_mod_nine: return {1, 2, 0};
    case ThreeClass::six_mod_nine: return {1, 2, 6};
  }
  throw std::logic_error("unreachable");
}

ThreeAdicFactor m2_factor(const arith::FundamentalDiscriminant& D, const fields::CubicField& E) {
  i64 mirror_disc = D.mirror().value();
  if (E.discriminant == mirror_disc) {
    switch (D.three_class()) {
      case ThreeClass::coprime: return {1, 0, 2};
      case ThreeClass::three_mod_nine: return {1, 2, 0};
      case ThreeClass::six_mod_nine: {
        int w3 = fields::omega(E, 3);
        // Here 3 | D and (D*/3) = 1, so 3 is split or inert in E; 0 means the
        // store fed us a wrong field.
        if (w3 == 0)
          throw std::logic_error("omega_E(3) = 0 for E of discriminant D* with D = " +
                                 std::to_string(D.value()));
        return {1, 2, 3 * w3};
      }
    }
  }
  if (E.discriminant == -27 * D.value())
    return D.three_class() == ThreeClass::coprime ? ThreeAdicFactor{1, 0, -1}
                                                  : ThreeAdicFactor{1, -1, 0};
  throw std::domain_error("m2_factor: field of discriminant " +
                          std::to_string(E.discriminant) + " is not in L_3(" +
                          std::to_string(D.value()) + ")");
}

std::vector<i64> euler_expand(const arith::FundamentalDiscriminant& D,
                              const std::function<int(i64)>& omega_at, i64 flimit) {
  if (flimit < 1) throw std::invalid_argument("euler_expand: flimit must be >= 1");
  std::vector<i64> coeff(static_cast<size_t>(flimit) + 1, 0);
  coeff[1] = 1;
  i64 m3d = -3 * D.value();
  for (i64 p : arith::primes_up_to(flimit)) {
    if (arith::kronecker(m3d, p) != 1) continue;
    i64 w = omega_at(p);
    if (w == 0) continue;
    // Descending k: reads see pre-pass values, and coeff[k] = 0 whenever p | k,
    // so the support stays squarefree.
    for (i64 k = flimit / p; k >= 1; --k) {
      if (coeff[static_cast<size_t>(k)] != 0)
        coeff[static_cast<size_t>(k * p)] += w * coeff[static_cast<size_t>(k)];
    }
  }
  return coeff;
}

namespace {

// Dirichlet convolution of the 3-power factor with a 3-free expansion.
void add_convolution(std::vector<i64>& acc, const ThreeAdicFactor& m,
                     const std::vector<i64>& e, i64 weight) {
  i64 flimit = static_cast<i64>(acc.size()) - 1;
  for (i64 f = 1; f <= flimit; ++f) {
    i64 v = m.t0 * e[static_cast<size_t>(f)];
    if (f % 3 == 0) v += m.t1 * e[static_cast<size_t>(f / 3)];
    if (f % 9 == 0) v += m.t2 * e[static_cast<size_t>(f / 9)];
    acc[static_cast<size_t>(f)] += weight * v;
  }
}

}  // namespace

CoeffSeries phi_coefficients(const arith::FundamentalDiscriminant& D, i64 flimit,
                             const fields::CubicFieldStore& store) {
  if (flimit < 1) throw std::invalid_argument("phi_coefficients: flimit must be >= 1");
  auto inv = fields::inventory(D, store);
  i64 cd = c_constant(D);

  std::vector<i64> acc(static_cast<size_t>(flimit) + 1, 0);
  auto main_term = euler_expand(D, [](i64) { return 2; }, flimit);
  add_convolution(acc, m1_factor(D), main_term, 1);

  auto add_field = [&](const fields::CubicField& E) {
    auto e = euler_expand(D, [&](i64 p) { return fields::omega(E, p); }, flimit);
    add_convolution(acc, m2_factor(D, E), e, 2);
  };
  for (const auto& E : inv.mirror_fields) add_field(E);
  for (const auto& E : inv.neg27_fields) add_field(E);

  CoeffSeries out{D, flimit, 2 * cd, std::move(acc)};
  // Scaling invariants; a violation means a transcription error somewhere.
  if (out.scaled[1] < cd || (out.scaled[1] - cd) % out.scale != 0)
    throw std::logic_error("phi_coefficients: f = 1 coefficient fails scaling invariant");
  for (i64 f = 2; f <= flimit; ++f) {
    i64 v = out.scaled[static_cast<size_t>(f)];
    if (v < 0 || v % out.scale != 0)
      throw std::logic_error("phi_coefficients: coefficient at f = " + std::to_string(f) +
                             " fails scaling invariant");
  }
  return out;
}

std::vector<i64> CoeffSeries::counts() const {
  std::vector<i64> n(static_cast<size_t>(flimit) + 1, 0);
  i64 cd = scale / 2;
  n[1] = (scaled[1] - cd) / scale;
  for (i64 f = 2; f <= flimit; ++f) n[static_cast<size_t>(f)] = scaled[static_cast<size_t>(f)] / scale;
  return n;
}

i64 CoeffSeries::count_sum() const {
  i64 cd = scale / 2;
  i64 total = (scaled[1] - cd) / scale;
  for (i64 f = 2; f <= flimit; ++f) total += scaled[static_cast<size_t>(f)] / scale;
  return total;
}

}  // namespace cubicfields::series
