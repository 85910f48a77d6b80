#include "cubicfields/sextic.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cubicfields/errors.hpp"

namespace cubicfields::sextic {

namespace {

// Largest |D| with |D|^3 < X.
i64 cube_root_strict(i128 X) {
  if (X <= 1) return 0;
  i128 r = icbrt(X - 1);
  while (r * r * r >= X) --r;  // correction, icbrt is already exact
  return static_cast<i64>(r);
}

// Largest f >= 0 with cube * f^4 < X.
i64 trunc_f(i128 X, i128 cube) {
  if (cube >= X) return 0;
  i128 f = iroot4((X - 1) / cube);
  while (f > 0 && cube * f * f * f * f >= X) --f;
  return static_cast<i64>(f);
}

}  // namespace

i64 required_coverage(i128 X) {
  return 27 * cube_root_strict(X);
}

SexticTally count_sextic(i128 X, forms::Sign sign, const fields::CubicFieldStore& store,
                         bool with_breakdown, unsigned workers) {
  if (X < 1) throw std::invalid_argument("count_sextic: bound must be >= 1");
  i64 dmax = cube_root_strict(X);
  i64 needed = 27 * dmax;
  forms::Sign table_sign = opposite(sign);
  if (store.coverage(table_sign) < needed)
    throw coverage_error("count_sextic needs cubic fields to |disc| <= " +
                         std::to_string(needed) + " of the " +
                         (table_sign == forms::Sign::negative ? "negative" : "positive") +
                         " sign, store covers " + std::to_string(store.coverage(table_sign)));

  std::vector<i64> ds;
  for (i64 n = 2; n <= dmax; ++n) {
    i64 d = sign == forms::Sign::positive ? n : -n;
    if (arith::is_fundamental(d)) ds.push_back(d);
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<size_t>(ds.size(), 1));

  std::vector<i64> per_d(ds.size(), 0);
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mu;
  auto run = [&] {
    try {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= ds.size() || failed.load()) break;
        arith::FundamentalDiscriminant D(ds[i]);
        i128 cube = static_cast<i128>(ds[i] < 0 ? -ds[i] : ds[i]);
        cube = cube * cube * cube;
        i64 flimit = trunc_f(X, cube);
        if (flimit < 1) continue;
        per_d[i] = series::phi_coefficients(D, flimit, store).count_sum();
      }
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mu);
      failed.store(true);
      if (error_message.empty()) error_message = e.what();
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned wi = 0; wi < workers; ++wi) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error(error_message);

  SexticTally tally;
  tally.bound = X;
  tally.sign = sign;
  if (with_breakdown) tally.breakdown.emplace();
  for (size_t i = 0; i < ds.size(); ++i) {
    tally.total += per_d[i];
    if (with_breakdown && per_d[i] != 0) (*tally.breakdown)[ds[i]] = per_d[i];
  }
  return tally;
}

}  // namespace cubicfields::sextic
