#include "cubicfields/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cubicfields/errors.hpp"

namespace cubicfields::oracle {

namespace {

using Poly = std::vector<i64>;  // coefficients mod p, ascending, trimmed

i64 mod_p(i64 v, i64 p) { return ((v % p) + p) % p; }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

i64 eval(const Poly& f, i64 x, i64 p) {
  i64 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

Poly mul(const Poly& f, const Poly& g, i64 p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

i64 inv_mod(i64 a, i64 p) {
  i64 t = 0, nt = 1, r = p, nr = mod_p(a, p);
  while (nr != 0) {
    i64 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return mod_p(t, p);
}

// Exact division assumed when used for factor removal; otherwise remainder.
std::pair<Poly, Poly> divmod(Poly f, const Poly& g, i64 p) {
  Poly q(f.size(), 0);
  i64 lead_inv = inv_mod(g.back(), p);
  while (degree(f) >= degree(g)) {
    int shift = degree(f) - degree(g);
    i64 coef = f.back() * lead_inv % p;
    q[shift] = coef;
    for (size_t i = 0; i < g.size(); ++i)
      f[shift + i] = mod_p(f[shift + i] - coef * g[i] % p, p);
    trim(f);
  }
  trim(q);
  return {q, f};
}

Poly gcd_poly(Poly f, Poly g, i64 p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = divmod(f, g, p).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

i64 abs64(i64 v) { return v < 0 ? -v : v; }

// Primes p with p^2 | n, exact for n >= 1 when trial_primes reach n^(1/3):
// past that, the cofactor has at most two prime factors, so its square part
// is itself or 1.
void square_primes(i64 n, const std::vector<i64>& trial_primes, std::vector<i64>& out) {
  out.clear();
  i64 rem = n;
  for (i64 p : trial_primes) {
    if (p * p * p > n) break;
    if (rem % p != 0) continue;
    int e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    if (e >= 2) out.push_back(p);
  }
  if (rem > 1) {
    i64 s = static_cast<i64>(isqrt(rem));
    if (s * s == rem) out.push_back(s);
  }
}

}  // namespace

bool dedekind_maximal_at(const fields::MonicCubic& mc, i64 p) {
  Poly f = {mod_p(mc.c0, p), mod_p(mc.c1, p), mod_p(mc.c2, p), 1};
  // Factor f mod p: roots to full multiplicity, then an irreducible tail.
  std::vector<std::pair<Poly, int>> factors;
  Poly rem = f;
  for (i64 r = 0; r < p && degree(rem) >= 1; ++r) {
    int e = 0;
    Poly lin = {mod_p(-r, p), 1};
    while (!rem.empty() && eval(rem, r, p) == 0) {
      rem = divmod(rem, lin, p).first;
      ++e;
    }
    if (e > 0) factors.push_back({lin, e});
  }
  if (degree(rem) >= 1) factors.push_back({rem, 1});

  bool squarefree = true;
  for (const auto& fac : factors)
    if (fac.second > 1) squarefree = false;
  if (squarefree) return true;

  Poly g = {1};
  for (const auto& fac : factors) g = mul(g, fac.first, p);
  Poly h = divmod(f, g, p).first;

  // T = (g*h - f)/p over Z, with g, h lifted to coefficients in [0, p).
  i64 gh[4] = {0, 0, 0, 0};
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < h.size(); ++j) gh[i + j] += g[i] * h[j];
  i64 fz[4] = {mc.c0, mc.c1, mc.c2, 1};
  Poly t(4, 0);
  for (int i = 0; i < 4; ++i) {
    i64 diff = gh[i] - fz[i];
    if (diff % p != 0) throw std::logic_error("dedekind: lift mismatch");
    t[static_cast<size_t>(i)] = mod_p(diff / p, p);
  }
  trim(t);

  Poly d = gcd_poly(gcd_poly(g, h, p), t, p);
  return degree(d) <= 0;
}

std::vector<fields::CubicField> hunter_enumerate(i64 bound, forms::Sign sign) {
  if (bound < 0) throw std::domain_error("hunter_enumerate: negative bound");
  if (bound > 1'000'000)
    throw limit_error("hunter_enumerate: bound beyond declared desk-scale limit (1e6)");
  std::vector<fields::CubicField> out;
  if (bound == 0) return out;

  // Hunter box: some generator has trace in {0, +-1} and
  // T2 <= 1/3 + (2/sqrt 3) sqrt(bound/3); then |e2| <= T2, |e3| <= (T2/3)^(3/2).
  double t2 = 1.0 / 3.0 + 2.0 * std::sqrt(static_cast<double>(bound)) / 3.0 + 0.5;
  i64 a1max = static_cast<i64>(t2) + 1;
  i64 a0max = static_cast<i64>(std::pow(t2 / 3.0, 1.5)) + 1;

  std::vector<std::vector<i64>> divs(static_cast<size_t>(a0max) + 1);
  for (i64 d = 1; d <= a0max; ++d)
    for (i64 m = d; m <= a0max; m += d) divs[static_cast<size_t>(m)].push_back(d);

  // (2 T2)^3 bounds |disc| of box polynomials, so trial primes to 2 T2 cover
  // square-part detection.
  auto trial_primes = arith::primes_up_to(static_cast<i64>(2.0 * t2) + 2);
  std::vector<i64> sq;

  const i64 want = sign == forms::Sign::positive ? 1 : -1;
  std::vector<forms::BinaryCubicForm> canon;
  for (i64 a2 = -1; a2 <= 1; ++a2) {
    for (i64 a1 = -a1max; a1 <= a1max; ++a1) {
      for (i64 a0 = -a0max; a0 <= a0max; ++a0) {
        if (a0 == 0) continue;
        i128 dp = 18 * static_cast<i128>(a2) * a1 * a0 - 4 * static_cast<i128>(a2) * a2 * a2 * a0 +
                  static_cast<i128>(a2) * a2 * a1 * a1 - 4 * static_cast<i128>(a1) * a1 * a1 -
                  27 * static_cast<i128>(a0) * a0;
        if (dp == 0 || (dp < 0 ? -1 : 1) != want) continue;
        // Integer roots divide a0.
        bool reducible = false;
        for (i64 r : divs[static_cast<size_t>(abs64(a0))]) {
          i64 pos = ((r + a2) * r + a1) * r + a0;
          i64 neg = ((-r + a2) * -r + a1) * -r + a0;
          if (pos == 0 || neg == 0) {
            reducible = true;
            break;
          }
        }
        if (reducible) continue;

        forms::BinaryCubicForm f{1, a2, a1, a0};
        fields::MonicCubic poly{a2, a1, a0};
        forms::BinaryCubicForm m = f;
        square_primes(static_cast<i64>(dp < 0 ? -dp : dp), trial_primes, sq);
        for (i64 p : sq) {
          bool ded = dedekind_maximal_at(poly, p);
          bool frm = forms::is_maximal_at(f, p);
          if (ded != frm)
            throw std::logic_error("maximality criteria disagree at p = " + std::to_string(p));
          while (!forms::is_maximal_at(m, p)) m = forms::strip_at(m, p);
        }
        i64 fd = forms::disc(m);
        if (abs64(fd) > bound) continue;
        canon.push_back(forms::reduce(m));
      }
    }
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  out.reserve(canon.size());
  for (const auto& f : canon) out.push_back(fields::make_field(f, /*validate=*/true));
  std::sort(out.begin(), out.end(), [](const fields::CubicField& x, const fields::CubicField& y) {
    i64 ax = abs64(x.discriminant), ay = abs64(y.discriminant);
    if (ax != ay) return ax < ay;
    if (x.discriminant != y.discriminant) return x.discriminant < y.discriminant;
    return x.form < y.form;
  });
  return out;
}

std::vector<i64> direct_count_by_f(const arith::FundamentalDiscriminant& D, i64 flimit) {
  if (flimit < 1) throw std::invalid_argument("direct_count_by_f: flimit must be >= 1");
  i64 ad = abs64(D.value());
  if (static_cast<i128>(ad) * flimit * flimit > 1'000'000)
    throw limit_error("direct_count_by_f: |D| flimit^2 beyond the oracle limit");
  auto fields_found =
      hunter_enumerate(ad * flimit * flimit,
                       D.value() < 0 ? forms::Sign::negative : forms::Sign::positive);
  std::map<i64, i64> by_disc;
  for (const auto& e : fields_found) ++by_disc[e.discriminant];
  std::vector<i64> counts(static_cast<size_t>(flimit) + 1, 0);
  for (i64 f = 1; f <= flimit; ++f) {
    auto it = by_disc.find(D.value() * f * f);
    counts[static_cast<size_t>(f)] = it == by_disc.end() ? 0 : it->second;
  }
  return counts;
}

i64 direct_sextic(i128 X, forms::Sign sign) {
  if (X < 1) throw std::invalid_argument("direct_sextic: bound must be >= 1");
  if (X > 1'000'000'000) throw limit_error("direct_sextic: bound beyond the oracle limit (1e9)");
  if (X == 1) return 0;
  i64 count = 0;
  for (const auto& e : hunter_enumerate(static_cast<i64>(isqrt(X)), sign)) {
    auto [D, f] = fields::resolvent_decompose(e.discriminant);
    if (D.value() == 1) continue;
    i128 ad = abs64(D.value());
    i128 v = ad * ad * ad * f * f;
    v = v * f * f;
    if (v < X) ++count;
  }
  return count;
}

}  // namespace cubicfields::oracle
