#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "cubicfields/errors.hpp"
#include "cubicfields/oracle.hpp"
#include "cubicfields/sextic.hpp"
#include "cubicfields/tableio.hpp"
#include "cubicfields/verify.hpp"

using namespace cubicfields;
using nlohmann::json;

namespace {

std::string cache_dir_from_env() {
  const char* dir = std::getenv("CUBIC_TABLE_DIR");
  return dir ? std::string(dir) : std::string();
}

// Exact decimal bound, with a^b convenience form (e.g. 10^12).
i128 parse_bound(const std::string& text) {
  auto caret = text.find('^');
  if (caret == std::string::npos) return parse_i128(text);
  i128 base = parse_i128(text.substr(0, caret));
  i128 exp = parse_i128(text.substr(caret + 1));
  if (base < 0 || exp < 0 || exp > 127) throw std::invalid_argument("bad a^b bound");
  i128 v = 1;
  const i128 cap = ~(i128(1) << 127);
  for (i128 i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) throw std::out_of_range("bound exceeds 128 bits");
    v *= base;
  }
  return v;
}

forms::Sign parse_sign(const std::string& s) {
  if (s == "+") return forms::Sign::positive;
  if (s == "-") return forms::Sign::negative;
  throw CLI::ValidationError("--sign must be + or -");
}

fields::CubicFieldStore store_for(const std::string& table_path, i64 need_neg, i64 need_pos,
                                  unsigned threads) {
  if (!table_path.empty()) {
    std::ifstream in(table_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open table file: " + table_path);
    auto store = tableio::parse_table(in);
    if (store.coverage(forms::Sign::negative) < need_neg ||
        store.coverage(forms::Sign::positive) < need_pos)
      throw coverage_error("table " + table_path + " covers (neg " +
                           std::to_string(store.coverage(forms::Sign::negative)) + ", pos " +
                           std::to_string(store.coverage(forms::Sign::positive)) +
                           "), need (neg " + std::to_string(need_neg) + ", pos " +
                           std::to_string(need_pos) + ")");
    return store;
  }
  return tableio::obtain_store(need_neg, need_pos, threads, cache_dir_from_env());
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

int run_cubics(const std::string& table, const std::string& ingest_path,
               const std::string& ingest_kind, const std::string& coeff_order, i64 min_abs,
               i64 max_abs, const std::string& sign_str, const std::string& format,
               const std::string& out_path, unsigned threads) {
  std::ofstream out_file;
  std::ostream& os = open_out(out_file, out_path);

  fields::CubicFieldStore store;
  if (!ingest_path.empty()) {
    std::ifstream in(ingest_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open ingest file: " + ingest_path);
    auto kind = ingest_kind == "polys" ? tableio::IngestKind::polynomials
                                       : tableio::IngestKind::forms;
    auto order = coeff_order == "constant-first" ? tableio::CoeffOrder::constant_first
                                                 : tableio::CoeffOrder::leading_first;
    store = tableio::ingest_loose(in, kind, order, 0, 0);
  } else {
    if (max_abs <= 0) throw CLI::ValidationError("cubics requires --max (or --ingest)");
    forms::Sign sign = parse_sign(sign_str);
    auto full = store_for(table, sign == forms::Sign::negative ? max_abs : 0,
                          sign == forms::Sign::positive ? max_abs : 0, threads);
    std::vector<fields::CubicField> picked;
    for (const auto& e : full.all()) {
      i64 ad = e.discriminant < 0 ? -e.discriminant : e.discriminant;
      if (ad < min_abs || ad > max_abs) continue;
      if ((e.discriminant < 0) != (sign == forms::Sign::negative)) continue;
      picked.push_back(e);
    }
    store = fields::CubicFieldStore::from_fields(std::move(picked), 0, 0);
  }

  if (format == "json") {
    json arr = json::array();
    for (const auto& e : store.all()) {
      arr.push_back({{"disc", e.discriminant},
                     {"a", e.form.a},
                     {"b", e.form.b},
                     {"c", e.form.c},
                     {"d", e.form.d}});
    }
    os << arr.dump() << '\n';
  } else {
    tableio::emit_table(store, os);
  }
  return 0;
}

int run_phi(i64 d, i64 flimit, const std::string& table, const std::string& format,
            unsigned threads) {
  arith::FundamentalDiscriminant D(d);
  i64 need = 27 * (d < 0 ? -d : d);
  auto store = d < 0 ? store_for(table, 0, need, threads) : store_for(table, need, 0, threads);
  auto coeffs = series::phi_coefficients(D, flimit, store);
  auto counts = coeffs.counts();
  if (format == "json") {
    json rows = json::array();
    for (i64 f = 1; f <= flimit; ++f)
      rows.push_back({f, counts[static_cast<size_t>(f)]});
    json out = {{"d", d}, {"flimit", flimit}, {"rows", rows}};
    std::cout << out.dump() << '\n';
  } else {
    for (i64 f = 1; f <= flimit; ++f)
      std::cout << f << ',' << counts[static_cast<size_t>(f)] << '\n';
  }
  return 0;
}

int run_sextic(const std::string& bound, const std::string& sign_str, bool breakdown,
               const std::string& table, const std::string& format, unsigned threads) {
  i128 x = parse_bound(bound);
  forms::Sign sign = parse_sign(sign_str);
  i64 need = sextic::required_coverage(x);
  auto store = sign == forms::Sign::positive ? store_for(table, need, 0, threads)
                                             : store_for(table, 0, need, threads);
  auto tally = sextic::count_sextic(x, sign, store, breakdown, threads);
  if (format == "json") {
    // bound emitted as a decimal string to stay exact at any size
    std::cout << "{\"bound\":\"" << to_string(tally.bound) << "\",\"sign\":\"" << sign_str
              << "\",\"total\":" << tally.total;
    if (tally.breakdown) {
      std::cout << ",\"breakdown\":{";
      bool first = true;
      for (const auto& [dd, n] : *tally.breakdown) {
        std::cout << (first ? "" : ",") << '"' << dd << "\":" << n;
        first = false;
      }
      std::cout << '}';
    }
    std::cout << "}\n";
  } else {
    std::cout << tally.total << '\n';
    if (tally.breakdown)
      for (const auto& [dd, n] : *tally.breakdown) std::cout << dd << '\t' << n << '\n';
  }
  return 0;
}

int run_verify(const std::string& suite, i64 bound, unsigned threads) {
  std::vector<verify::SuiteReport> reports;
  if (suite == "forms" || suite == "all")
    reports.push_back(verify::forms_suite(bound > 0 ? std::min<i64>(bound, 1'000'000) : 100'000,
                                          threads));
  if (suite == "phi" || suite == "all")
    reports.push_back(verify::phi_suite(500, bound > 0 ? std::min<i64>(bound, 1'000'000)
                                                       : 200'000, threads));
  if (suite == "valuations" || suite == "all")
    reports.push_back(verify::valuations_suite(bound > 0 ? bound : 100'000, threads));
  if (suite == "sextic" || suite == "all") {
    i128 xmax = bound > 0 ? std::min<i128>(i128(bound), 1'000'000'000) : 100'000'000;
    reports.push_back(verify::sextic_suite(xmax, threads));
  }
  if (reports.empty()) throw CLI::ValidationError("unknown suite: " + suite);
  bool all_pass = true;
  for (const auto& r : reports) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.scope;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << '\n';
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubic fields with given quadratic resolvent: tables, resolvent series, "
               "S3-sextic counts"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();

  auto* cubics = app.add_subcommand("cubics", "enumerate, query or ingest cubic field tables");
  i64 min_abs = 1, max_abs = 0;
  std::string sign_str = "-", table, format = "tsv", out_path;
  std::string ingest_path, ingest_kind = "forms", coeff_order = "leading-first";
  cubics->add_option("--min", min_abs, "minimum |disc|");
  cubics->add_option("--max", max_abs, "maximum |disc|");
  cubics->add_option("--sign", sign_str, "+ or -");
  cubics->add_option("--table", table, "query this v1 table instead of enumerating");
  cubics->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  cubics->add_option("--out", out_path, "write to a file instead of stdout");
  cubics->add_option("--ingest", ingest_path, "normalize an external table to v1");
  cubics->add_option("--ingest-kind", ingest_kind)->check(CLI::IsMember({"forms", "polys"}));
  cubics->add_option("--coeff-order", coeff_order)
      ->check(CLI::IsMember({"leading-first", "constant-first"}));

  auto* phi = app.add_subcommand("phi", "coefficients N_f of the resolvent series");
  i64 phi_d = 0, phi_flimit = 0;
  std::string phi_table, phi_format = "csv";
  phi->add_option("--d", phi_d, "fundamental discriminant")->required();
  phi->add_option("--flimit", phi_flimit, "truncation index")->required();
  phi->add_option("--table", phi_table);
  phi->add_option("--format", phi_format)->check(CLI::IsMember({"csv", "json"}));

  auto* sextic = app.add_subcommand("sextic", "count S3-sextic fields with 0 < ±Disc < X");
  std::string sx_bound, sx_sign = "+", sx_table, sx_format = "text";
  bool sx_breakdown = false;
  sextic->add_option("--bound", sx_bound, "exact decimal bound X (a^b accepted)")->required();
  sextic->add_option("--sign", sx_sign, "+ or -");
  sextic->add_option("--table", sx_table);
  sextic->add_flag("--breakdown", sx_breakdown, "per-discriminant counts");
  sextic->add_option("--format", sx_format)->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run brute-force oracle suites");
  std::string suite;
  i64 vbound = 0;
  verify_cmd->add_option("--suite", suite, "phi|sextic|forms|valuations|all")->required();
  verify_cmd->add_option("--bound", vbound, "suite-specific bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (*cubics)
      return run_cubics(table, ingest_path, ingest_kind, coeff_order, min_abs, max_abs, sign_str,
                        format, out_path, threads);
    if (*phi) return run_phi(phi_d, phi_flimit, phi_table, phi_format, threads);
    if (*sextic)
      return run_sextic(sx_bound, sx_sign, sx_breakdown, sx_table, sx_format, threads);
    if (*verify_cmd) return run_verify(suite, vbound, threads);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
