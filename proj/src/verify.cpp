#include "cubicfields/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cubicfields/fields.hpp"
#include "cubicfields/oracle.hpp"
#include "cubicfields/series.hpp"
#include "cubicfields/sextic.hpp"

namespace cubicfields::verify {

namespace {

i64 abs64(i64 v) { return v < 0 ? -v : v; }

std::string form_str(const forms::BinaryCubicForm& f) {
  std::ostringstream os;
  os << "(" << f.a << "," << f.b << "," << f.c << "," << f.d << ")";
  return os.str();
}

}  // namespace

SuiteReport forms_suite(i64 bound, unsigned workers) {
  SuiteReport rep{"forms", "enumerate_classes vs hunter_enumerate, |disc| <= " +
                               std::to_string(bound) + ", both signs",
                  true, ""};
  for (auto sign : {forms::Sign::negative, forms::Sign::positive}) {
    forms::EnumerationRequest req;
    req.max_abs_disc = bound;
    req.sign = sign;
    auto fast = forms::enumerate_classes(req, workers);
    auto slow = oracle::hunter_enumerate(bound, sign);
    std::vector<forms::BinaryCubicForm> slow_forms;
    slow_forms.reserve(slow.size());
    for (const auto& e : slow) slow_forms.push_back(e.form);
    if (fast == slow_forms) continue;
    rep.pass = false;
    size_t n = std::min(fast.size(), slow_forms.size());
    size_t i = 0;
    while (i < n && fast[i] == slow_forms[i]) ++i;
    std::ostringstream os;
    os << "sign " << (sign == forms::Sign::negative ? "-" : "+") << ": counts "
       << fast.size() << " vs " << slow_forms.size();
    if (i < fast.size() || i < slow_forms.size()) {
      os << "; first difference at index " << i << ": "
         << (i < fast.size() ? form_str(fast[i]) : std::string("<none>")) << " vs "
         << (i < slow_forms.size() ? form_str(slow_forms[i]) : std::string("<none>"));
    }
    rep.detail = os.str();
    return rep;
  }
  return rep;
}

SuiteReport phi_suite(i64 dmax, i64 discf2_bound, unsigned workers) {
  SuiteReport rep{"phi", "series counts vs brute force, |D| <= " + std::to_string(dmax) +
                             ", |D| f^2 <= " + std::to_string(discf2_bound),
                  true, ""};
  auto store = fields::CubicFieldStore::from_enumeration(27 * dmax, 27 * dmax, workers);
  std::map<i64, i64> counts_by_disc;
  for (auto sign : {forms::Sign::negative, forms::Sign::positive})
    for (const auto& e : oracle::hunter_enumerate(discf2_bound, sign))
      ++counts_by_disc[e.discriminant];
  i64 checked = 0;
  for (i64 ad = 2; ad <= dmax; ++ad) {
    for (i64 d : {-ad, ad}) {
      if (!arith::is_fundamental(d)) continue;
      i64 flimit = static_cast<i64>(isqrt(discf2_bound / ad));
      if (flimit < 1) continue;
      arith::FundamentalDiscriminant D(d);
      auto series_counts = series::phi_coefficients(D, flimit, store).counts();
      for (i64 f = 1; f <= flimit; ++f) {
        auto it = counts_by_disc.find(d * f * f);
        i64 expect = it == counts_by_disc.end() ? 0 : it->second;
        if (series_counts[static_cast<size_t>(f)] != expect) {
          rep.pass = false;
          rep.detail = "D = " + std::to_string(d) + ", f = " + std::to_string(f) +
                       ": series gives " + std::to_string(series_counts[static_cast<size_t>(f)]) +
                       ", brute force gives " + std::to_string(expect);
          return rep;
        }
        ++checked;
      }
    }
  }
  rep.detail = std::to_string(checked) + " (D, f) pairs agree exactly";
  return rep;
}

SuiteReport sextic_suite(i128 xmax, unsigned workers) {
  SuiteReport rep{"sextic",
                  "count_sextic vs direct_sextic, X = 1e4.." + to_string(xmax) + ", both signs",
                  true, ""};
  i64 coverage = sextic::required_coverage(xmax);
  auto store = fields::CubicFieldStore::from_enumeration(coverage, coverage, workers);
  std::ostringstream agreed;
  for (i128 x = 10'000; x <= xmax; x *= 10) {
    for (auto sign : {forms::Sign::positive, forms::Sign::negative}) {
      i64 direct = oracle::direct_sextic(x, sign);
      i64 fast = sextic::count_sextic(x, sign, store, false, workers).total;
      if (direct != fast) {
        rep.pass = false;
        rep.detail = "X = " + to_string(x) +
                     (sign == forms::Sign::positive ? " (+)" : " (-)") + ": count_sextic " +
                     std::to_string(fast) + " vs direct " + std::to_string(direct);
        return rep;
      }
      agreed << (sign == forms::Sign::positive ? " +" : " -") << std::to_string(fast);
    }
  }
  rep.detail = "totals per decade:" + agreed.str();
  return rep;
}

SuiteReport valuations_suite(i64 bound, unsigned workers) {
  SuiteReport rep{"valuations", "v3(disc) over all classes with |disc| <= " +
                                    std::to_string(bound) + ", both signs",
                  true, ""};
  std::map<int, i64> v3_hist;
  i64 total = 0;
  for (auto sign : {forms::Sign::negative, forms::Sign::positive}) {
    forms::EnumerationRequest req;
    req.max_abs_disc = bound;
    req.sign = sign;
    for (const auto& f : forms::enumerate_classes(req, workers)) {
      int v3 = 0;
      for (const auto& pe : arith::factorize(abs64(forms::disc(f)))) {
        if (pe.prime == 3) v3 = pe.exponent;
        // v2 <= 3 and vl <= 2 for l > 3 ride along.
        if ((pe.prime == 2 && pe.exponent > 3) || (pe.prime > 3 && pe.exponent > 2)) {
          rep.pass = false;
          rep.detail = "form " + form_str(f) + " has v_" + std::to_string(pe.prime) +
                       "(disc) = " + std::to_string(pe.exponent);
          return rep;
        }
      }
      ++v3_hist[v3];
      ++total;
      if (v3 != 0 && v3 != 1 && v3 != 3 && v3 != 4 && v3 != 5) {
        rep.pass = false;
        rep.detail = "form " + form_str(f) + " has v3(disc) = " + std::to_string(v3);
        return rep;
      }
    }
  }
  std::ostringstream os;
  os << total << " classes; v3 proportions (observed vs 81/117, 27/117, 6/117, 2/117, 1/117):";
  const double expected[6] = {81.0 / 117, 27.0 / 117, 0, 6.0 / 117, 2.0 / 117, 1.0 / 117};
  for (int v : {0, 1, 3, 4, 5}) {
    double obs = total == 0 ? 0.0 : static_cast<double>(v3_hist[v]) / static_cast<double>(total);
    os << " v3=" << v << ": " << obs << " (" << expected[v] << ")";
  }
  rep.detail = os.str();
  return rep;
}

}  // namespace cubicfields::verify
