#include "cubicfields/forms.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cubicfields/arith.hpp"
#include "cubicfields/errors.hpp"

namespace cubicfields::forms {

namespace {

i128 w(i64 v) { return static_cast<i128>(v); }

i64 floor_div(i128 num, i128 den) {
  i128 q = num / den, r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return static_cast<i64>(q);
}

i64 ceil_div(i128 num, i128 den) {
  i128 q = num / den, r = num % den;
  if (r != 0 && ((r < 0) == (den < 0))) ++q;
  return static_cast<i64>(q);
}

i64 abs64(i64 v) { return v < 0 ? -v : v; }

struct Hessian {
  i128 P, Q, R;
};

Hessian hessian(const BinaryCubicForm& f) {
  return {w(f.b) * f.b - 3 * w(f.a) * f.c,
          w(f.b) * f.c - 9 * w(f.a) * f.d,
          w(f.c) * f.c - 3 * w(f.b) * f.d};
}

bool reduced_positive(const BinaryCubicForm& f) {
  auto [P, Q, R] = hessian(f);
  if (f.a <= 0) return false;
  if (f.b < 0 || (f.b == 0 && f.d < 0)) return false;
  if (P > R || (P == R && !(f.a < abs64(f.d) || (f.a == abs64(f.d) && f.b < abs64(f.c)))))
    return false;
  if (Q > P || -Q > P) return false;
  if (Q == 0 && f.d >= 0) return false;
  if (P == Q && f.b >= abs64(3 * f.a - f.b)) return false;
  return true;
}

bool reduced_negative(const BinaryCubicForm& f) {
  if (w(f.d) * f.d - w(f.a) * f.a + w(f.a) * f.c - w(f.b) * f.d <= 0) return false;
  if (f.a <= 0) return false;
  if (f.b < 0 || (f.b == 0 && f.d < 0)) return false;
  i128 t = w(f.a) * f.d - w(f.b) * f.c;
  if (t >= w(f.a + f.b) * (f.a + f.b) + w(f.a) * f.c) return false;
  if (t <= -w(f.a - f.b) * (f.a - f.b) - w(f.a) * f.c) return false;
  return true;
}

}  // namespace

i128 disc_wide(const BinaryCubicForm& f) {
  i128 a = f.a, b = f.b, c = f.c, d = f.d;
  return 18 * a * b * c * d + b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d -
         27 * a * a * d * d;
}

i64 disc(const BinaryCubicForm& f) {
  i128 v = disc_wide(f);
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("form discriminant exceeds 64 bits");
  return static_cast<i64>(v);
}

namespace {

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("form coefficient exceeds 64 bits");
  return static_cast<i64>(v);
}

}  // namespace

BinaryCubicForm translate(const BinaryCubicForm& f, i64 k) {
  i128 a = f.a, b = f.b, c = f.c, kk = k;
  return {f.a, narrow(3 * a * kk + b), narrow((3 * a * kk + 2 * b) * kk + c),
          narrow((((a * kk + b) * kk + c) * kk) + f.d)};
}

BinaryCubicForm swap_xy(const BinaryCubicForm& f) { return {f.d, f.c, f.b, f.a}; }
BinaryCubicForm flip_x(const BinaryCubicForm& f) { return {-f.a, f.b, -f.c, f.d}; }
BinaryCubicForm flip_y(const BinaryCubicForm& f) { return {f.a, -f.b, f.c, -f.d}; }

bool is_reduced(const BinaryCubicForm& f) {
  i128 d = disc_wide(f);
  if (d == 0) throw std::domain_error("is_reduced: zero discriminant");
  return d > 0 ? reduced_positive(f) : reduced_negative(f);
}

// Reduction loops after Belabas, "A fast algorithm to compute cubic fields"
// (Math. Comp. 66, 1997), Definitions 3.2 and 4.2.
BinaryCubicForm reduce(BinaryCubicForm f) {
  i128 d = disc_wide(f);
  if (d == 0) throw std::domain_error("reduce: zero discriminant");
  if (d > 0) {
    for (int step = 0;; ++step) {
      if (step > 10000) throw std::logic_error("reduce: positive loop did not converge");
      auto [P, Q, R] = hessian(f);
      if (f.a < 0) {
        f = flip_x(f);
      } else if (f.b < 0 || (f.b == 0 && f.d < 0)) {
        f = flip_y(f);
      } else if (P > R ||
                 (P == R && (f.a > abs64(f.d) || (f.a == abs64(f.d) && f.b >= abs64(f.c))))) {
        f = swap_xy(f);
      } else if (Q > P) {
        f = translate(f, -1);
      } else if (-Q > P) {
        f = translate(f, 1);
      } else if (Q == 0 && f.d >= 0) {
        // Unreachable for irreducible forms: Q = 0 with b > 0 forces
        // R = -cP/(3a) < 0, impossible for a definite Hessian.
        throw std::logic_error("reduce: Q = 0 tie with d >= 0");
      } else if (P == Q && f.b >= abs64(3 * f.a - f.b)) {
        f = translate(f, -1);
      } else {
        break;
      }
    }
  } else {
    for (int step = 0;; ++step) {
      if (step > 10000) throw std::logic_error("reduce: negative loop did not converge");
      if (w(f.d) * f.d - w(f.a) * f.a + w(f.a) * f.c - w(f.b) * f.d <= 0) {
        f = swap_xy(f);
      } else if (f.a < 0) {
        f = flip_x(f);
      } else if (f.b < 0 || (f.b == 0 && f.d < 0)) {
        f = flip_y(f);
      } else if (w(f.a) * f.d - w(f.b) * f.c >= w(f.a + f.b) * (f.a + f.b) + w(f.a) * f.c) {
        f = translate(f, 1);
      } else if (w(f.a) * f.d - w(f.b) * f.c <= -w(f.a - f.b) * (f.a - f.b) - w(f.a) * f.c) {
        f = translate(f, -1);
      } else {
        break;
      }
    }
  }
  return f;
}

bool is_primitive(const BinaryCubicForm& f) {
  i64 g = std::gcd(std::gcd(abs64(f.a), abs64(f.b)), std::gcd(abs64(f.c), abs64(f.d)));
  return g == 1;
}

namespace {

void divisors_of(i64 n, std::vector<i64>& out) {
  out.assign(1, 1);
  for (const auto& pe : arith::factorize(n)) {
    size_t count = out.size();
    i64 pk = 1;
    for (int e = 1; e <= pe.exponent; ++e) {
      pk *= pe.prime;
      for (size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
}

}  // namespace

bool is_irreducible(const BinaryCubicForm& f) {
  if (f.a == 0 || f.d == 0) return false;  // root at (1:0) resp. (0:1)
  std::vector<i64> us, vs;
  divisors_of(abs64(f.d), us);
  divisors_of(abs64(f.a), vs);
  for (i64 v : vs) {
    for (i64 u : us) {
      if (std::gcd(u, v) != 1) continue;
      // root (u : v) or (-u : v)
      i128 even = w(f.b) * u * u * v + w(f.d) * v * v * v;
      i128 odd = w(f.a) * u * u * u + w(f.c) * u * v * v;
      if (even == odd || even == -odd) return false;
    }
  }
  return true;
}

bool is_maximal_at(const BinaryCubicForm& f, i64 p) {
  i64 a = ((f.a % p) + p) % p, b = ((f.b % p) + p) % p;
  i64 c = ((f.c % p) + p) % p, dd = ((f.d % p) + p) % p;
  i128 p2 = w(p) * p;
  // Finite multiple roots: f(r) = f'(r) = 0 mod p.
  for (i64 r = 0; r < p; ++r) {
    i64 val = ((((a * r + b) % p) * r + c) % p * r + dd) % p;
    if (val != 0) continue;
    i64 der = (((3 * a % p) * r + 2 * b) % p * r + c) % p;
    if (der != 0) continue;
    i128 full = ((w(f.a) * r + f.b) * r + f.c) * r + f.d;
    if (full % p2 == 0) return false;
  }
  // Multiple root at infinity needs p | a and p | b.
  if (a == 0 && b == 0) {
    if (w(f.a) % p2 == 0) return false;
  }
  return true;
}

bool is_maximal(const BinaryCubicForm& f) {
  i64 d = disc(f);
  for (const auto& pe : arith::factorize(abs64(d))) {
    if (pe.exponent < 2) continue;
    if (!is_maximal_at(f, pe.prime)) return false;
  }
  return true;
}

BinaryCubicForm strip_at(BinaryCubicForm f, i64 p) {
  i64 a = ((f.a % p) + p) % p, b = ((f.b % p) + p) % p;
  i64 c = ((f.c % p) + p) % p, dd = ((f.d % p) + p) % p;
  i128 p2 = w(p) * p;
  bool stripped = false;
  for (i64 r = 0; r < p && !stripped; ++r) {
    i64 val = ((((a * r + b) % p) * r + c) % p * r + dd) % p;
    if (val != 0) continue;
    i64 der = (((3 * a % p) * r + 2 * b) % p * r + c) % p;
    if (der != 0) continue;
    i128 full = ((w(f.a) * r + f.b) * r + f.c) * r + f.d;
    if (full % p2 != 0) continue;
    // Move the multiple root to (0:1), then absorb p into x.
    BinaryCubicForm t = translate(f, r);
    f = {narrow(w(p) * t.a), t.b, t.c / p, narrow(w(t.d) / p2)};
    stripped = true;
  }
  if (!stripped) {
    if (a == 0 && b == 0 && w(f.a) % p2 == 0) {
      f = {narrow(w(f.a) / p2), f.b / p, f.c, narrow(w(p) * f.d)};
    } else {
      throw std::logic_error("strip_at: form is maximal at p");
    }
  }
  i64 g = std::gcd(std::gcd(abs64(f.a), abs64(f.b)), std::gcd(abs64(f.c), abs64(f.d)));
  if (g > 1) f = {f.a / g, f.b / g, f.c / g, f.d / g};
  return f;
}

BinaryCubicForm maximalize(BinaryCubicForm f) {
  for (int guard = 0; guard < 256; ++guard) {
    i64 d = disc(f);
    if (d == 0) throw std::domain_error("maximalize: zero discriminant");
    bool changed = false;
    for (const auto& pe : arith::factorize(abs64(d))) {
      if (pe.exponent < 2) continue;
      if (!is_maximal_at(f, pe.prime)) {
        f = strip_at(f, pe.prime);
        changed = true;
        break;
      }
    }
    if (!changed) return f;
  }
  throw std::logic_error("maximalize: did not terminate");
}

namespace {

struct Emitted {
  i64 abs_disc;
  BinaryCubicForm form;
  bool operator<(const Emitted& o) const {
    if (abs_disc != o.abs_disc) return abs_disc < o.abs_disc;
    return form < o.form;
  }
  bool operator==(const Emitted& o) const = default;
};

// Full per-candidate filter chain shared by both signs.
void consider(const EnumerationRequest& req, i64 want_sign, const BinaryCubicForm& f,
              std::vector<Emitted>& out) {
  i128 dw = disc_wide(f);
  if (dw == 0) return;
  i128 ad = dw < 0 ? -dw : dw;
  if ((dw < 0 ? -1 : 1) != want_sign) return;
  if (ad < req.min_abs_disc || ad > req.max_abs_disc) return;
  i64 dv = static_cast<i64>(dw);
  if (req.disc_filter && !req.disc_filter(dv)) return;
  if (!(dw > 0 ? reduced_positive(f) : reduced_negative(f))) return;
  if (!is_primitive(f)) return;
  if (!is_irreducible(f)) return;
  if (!is_maximal(f)) return;
  out.push_back({static_cast<i64>(ad), f});
}

// Reduced totally real forms satisfy P <= sqrt(disc); with |Q| <= P <= R this
// pins c for fixed (a, b), then |Q| <= P and R >= P pin d.
void scan_positive_ab(const EnumerationRequest& req, i64 a, i64 b, i64 pmax,
                      std::vector<Emitted>& out) {
  i64 c_lo = ceil_div(w(b) * b - pmax, 3 * w(a));
  i64 c_hi = floor_div(w(b) * b - 1, 3 * w(a));
  for (i64 c = c_lo; c <= c_hi; ++c) {
    i128 P = w(b) * b - 3 * w(a) * c;
    i128 bc = w(b) * c;
    i64 d_lo = ceil_div(bc - P, 9 * w(a));
    i64 d_hi = floor_div(bc + P, 9 * w(a));
    if (b > 0) {
      d_hi = std::min(d_hi, floor_div(w(c) * c - P, 3 * w(b)));
    } else if (w(c) * c < P) {
      continue;  // R = c^2 < P
    }
    for (i64 d = d_lo; d <= d_hi; ++d) consider(req, +1, {a, b, c, d}, out);
  }
}

// For reduced complex forms the quadratic factor's root lies in the modular
// fundamental domain, which gives |disc| >= 1.5 a^4, a theta-spread bound, and
// |complex root|^2 <= (|disc|/2.89 a^4)^(1/3) + 0.27; the c window below is a
// slacked integer version of those bounds.
void scan_negative_ab(const EnumerationRequest& req, i64 a, i64 b, std::vector<Emitted>& out) {
  const i64 B = req.max_abs_disc;
  i64 c_hi = static_cast<i64>(icbrt(B)) + static_cast<i64>(iroot4(B)) + a + 4;
  i64 c_lo = -(static_cast<i64>(iroot4(B)) + a + 4);
  const i128 alpha = 27 * w(a) * a;
  for (i64 c = c_lo; c <= c_hi; ++c) {
    i128 bc = w(b) * c, ac = w(a) * c;
    // Strict translation inequalities: -(a-b)^2 - ac < ad - bc < (a+b)^2 + ac.
    i64 d_lo = floor_div(bc - w(a - b) * (a - b) - ac, w(a)) + 1;
    i64 d_hi = ceil_div(bc + w(a + b) * (a + b) + ac, w(a)) - 1;
    if (d_lo > d_hi) continue;
    // v(d) = -alpha d^2 + A1 d + A0 must land in [-B, -min].
    i128 A1 = 18 * w(a) * b * c - 4 * w(b) * b * b;
    i128 A0 = w(b) * b * c * c - 4 * w(a) * c * c * c;
    i128 disc_outer = A1 * A1 + 4 * alpha * (B + A0);
    if (disc_outer < 0) continue;  // parabola entirely below -B
    i128 s_out = isqrt(disc_outer);
    i64 lo_out = std::max<i64>(d_lo, floor_div(A1 - s_out, 2 * alpha) - 1);
    i64 hi_out = std::min<i64>(d_hi, ceil_div(A1 + s_out, 2 * alpha) + 1);
    if (lo_out > hi_out) continue;
    i128 disc_inner = A1 * A1 + 4 * alpha * (A0 + req.min_abs_disc);
    if (disc_inner < 0) {
      for (i64 d = lo_out; d <= hi_out; ++d) consider(req, -1, {a, b, c, d}, out);
    } else {
      i128 s_in = isqrt(disc_inner);
      i64 left_end = std::min<i64>(hi_out, ceil_div(A1 - s_in, 2 * alpha) + 1);
      i64 right_begin = std::max<i64>(lo_out, floor_div(A1 + s_in, 2 * alpha) - 1);
      for (i64 d = lo_out; d <= left_end; ++d) consider(req, -1, {a, b, c, d}, out);
      for (i64 d = std::max(right_begin, left_end + 1); d <= hi_out; ++d)
        consider(req, -1, {a, b, c, d}, out);
    }
  }
}

}  // namespace

std::vector<BinaryCubicForm> enumerate_classes(const EnumerationRequest& req, unsigned workers) {
  if (req.max_abs_disc < 1 || req.min_abs_disc < 1 || req.min_abs_disc > req.max_abs_disc)
    throw std::invalid_argument("enumerate_classes: bad discriminant range");
  if (req.max_abs_disc > 1'000'000'000)
    throw limit_error("enumerate_classes: bound beyond supported range (1e9)");
  const i64 B = req.max_abs_disc;
  const i64 quarter_root = static_cast<i64>(iroot4(B));
  const bool positive = req.sign == Sign::positive;

  struct Task {
    i64 a, b;
  };
  std::vector<Task> tasks;
  i64 a_hi = quarter_root + 2;
  for (i64 a = 1; a <= a_hi; ++a) {
    i64 b_hi = positive ? 3 * a / 2 + static_cast<i64>(iroot4(4 * w(B) > w(B) ? 4 * B : B)) + 3
                        : quarter_root + 8 * a / 5 + 3;
    for (i64 b = 0; b <= b_hi; ++b) tasks.push_back({a, b});
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<size_t>(tasks.size(), 1));

  const i64 pmax = static_cast<i64>(isqrt(B));
  std::vector<std::vector<Emitted>> partial(workers);
  std::atomic<size_t> next{0};
  auto run = [&](unsigned wi) {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      if (positive)
        scan_positive_ab(req, tasks[i].a, tasks[i].b, pmax, partial[wi]);
      else
        scan_negative_ab(req, tasks[i].a, tasks[i].b, partial[wi]);
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned wi = 0; wi < workers; ++wi) pool.emplace_back(run, wi);
    for (auto& t : pool) t.join();
  }

  std::vector<Emitted> all;
  for (auto& v : partial) {
    all.insert(all.end(), v.begin(), v.end());
    v.clear();
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::logic_error("enumerate_classes: duplicate canonical form");
  std::vector<BinaryCubicForm> out;
  out.reserve(all.size());
  for (const auto& e : all) out.push_back(e.form);
  return out;
}

}  // namespace cubicfields::forms
