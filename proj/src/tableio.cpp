#include "cubicfields/tableio.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "cubicfields/errors.hpp"

namespace cubicfields::tableio {

namespace fs = std::filesystem;

namespace {

i64 abs64(i64 v) { return v < 0 ? -v : v; }

struct RecordKey {
  i64 disc;
  forms::BinaryCubicForm form;
  auto key() const { return std::tuple(abs64(disc), disc, form.a, form.b, form.c, form.d); }
  bool operator<(const RecordKey& o) const { return key() < o.key(); }
  bool operator==(const RecordKey& o) const { return key() == o.key(); }
};

// Canonical decimal token: what emit_table writes, nothing else.
i64 parse_strict_int(const std::string& tok, long line) {
  if (tok.empty()) throw parse_error("empty integer field", line);
  size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) throw parse_error("sign without digits", line);
  if (tok[i] == '0' && tok.size() > i + 1) throw parse_error("leading zero in integer", line);
  i64 v = 0;
  for (; i < tok.size(); ++i) {
    char ch = tok[i];
    if (ch < '0' || ch > '9') throw parse_error("non-digit in integer field", line);
    if (v > (std::numeric_limits<i64>::max() - (ch - '0')) / 10)
      throw parse_error("integer field overflows 64 bits", line);
    v = v * 10 + (ch - '0');
  }
  if (tok[0] == '-') {
    if (tok == "-0") throw parse_error("negative zero", line);
    v = -v;
  }
  return v;
}

void validate_record(const RecordKey& rec, long line) {
  if (forms::disc(rec.form) != rec.disc)
    throw parse_error("record discriminant does not match the form", line);
  if (!forms::is_primitive(rec.form)) throw parse_error("imprimitive form", line);
  if (!forms::is_irreducible(rec.form)) throw parse_error("reducible form", line);
  if (!forms::is_reduced(rec.form)) throw parse_error("non-canonical form", line);
  if (!forms::is_maximal(rec.form)) throw parse_error("non-maximal form", line);
}

fields::CubicFieldStore finish(std::vector<RecordKey> recs, i64 cov_neg, i64 cov_pos) {
  std::vector<fields::CubicField> out;
  out.reserve(recs.size());
  for (const auto& r : recs) out.push_back(fields::make_field(r.form, /*validate=*/false));
  return fields::CubicFieldStore::from_fields(std::move(out), cov_neg, cov_pos);
}

std::vector<RecordKey> parse_records(std::istream& is) {
  std::string line;
  long line_no = 0;
  if (!std::getline(is, line)) throw parse_error("missing header", 1);
  ++line_no;
  if (line != kHeaderV1) throw parse_error("bad header, expected '# cubicfields v1'", 1);
  std::vector<RecordKey> recs;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      throw parse_error("CR line ending, records must end with LF alone", line_no);
    if (line.empty()) throw parse_error("blank line", line_no);
    std::array<std::string, 5> tok;
    size_t field = 0, start = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        if (field >= 5) throw parse_error("too many fields", line_no);
        tok[field++] = line.substr(start, i - start);
        start = i + 1;
      }
    }
    if (field != 5) throw parse_error("expected 5 tab-separated fields", line_no);
    RecordKey rec;
    rec.disc = parse_strict_int(tok[0], line_no);
    rec.form = {parse_strict_int(tok[1], line_no), parse_strict_int(tok[2], line_no),
                parse_strict_int(tok[3], line_no), parse_strict_int(tok[4], line_no)};
    validate_record(rec, line_no);
    if (!recs.empty()) {
      if (rec == recs.back()) throw parse_error("duplicate record", line_no);
      if (rec < recs.back()) throw parse_error("records out of order", line_no);
    }
    recs.push_back(rec);
  }
  return recs;
}

}  // namespace

void emit_table(const fields::CubicFieldStore& store, std::ostream& os) {
  os << kHeaderV1 << '\n';
  for (const auto& e : store.all()) {
    os << e.discriminant << '\t' << e.form.a << '\t' << e.form.b << '\t' << e.form.c << '\t'
       << e.form.d << '\n';
  }
  if (!os) throw std::runtime_error("emit_table: write failure");
}

fields::CubicFieldStore parse_table(std::istream& is) {
  auto recs = parse_records(is);
  i64 cov_neg = 0, cov_pos = 0;
  for (const auto& r : recs)
    (r.disc < 0 ? cov_neg : cov_pos) = std::max(r.disc < 0 ? cov_neg : cov_pos, abs64(r.disc));
  return finish(std::move(recs), cov_neg, cov_pos);
}

fields::CubicFieldStore parse_table(std::istream& is, i64 coverage_neg, i64 coverage_pos) {
  return finish(parse_records(is), coverage_neg, coverage_pos);
}

fields::CubicFieldStore ingest_loose(std::istream& is, IngestKind kind, CoeffOrder order,
                                     i64 coverage_neg, i64 coverage_pos) {
  std::string line;
  long line_no = 0;
  std::vector<forms::BinaryCubicForm> canon;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> tok;
    std::string t;
    while (ss >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    std::vector<i64> v;
    for (const auto& s : tok) {
      try {
        v.push_back(static_cast<i64>(parse_i128(s)));
      } catch (const std::exception&) {
        throw parse_error("bad integer token '" + s + "'", line_no);
      }
    }
    forms::BinaryCubicForm f;
    std::optional<i64> declared_disc;
    if (kind == IngestKind::forms) {
      if (v.size() == 5) {
        declared_disc = v[0];
        v.erase(v.begin());
      }
      if (v.size() != 4) throw parse_error("expected 4 (or 5) integers for a form", line_no);
      if (order == CoeffOrder::constant_first) std::reverse(v.begin(), v.end());
      f = {v[0], v[1], v[2], v[3]};
    } else {
      if (order == CoeffOrder::constant_first) std::reverse(v.begin(), v.end());
      if (v.size() == 4) {
        if (v[0] != 1) throw parse_error("polynomial must be monic", line_no);
        v.erase(v.begin());
      }
      if (v.size() != 3) throw parse_error("expected 3 (or 4) coefficients", line_no);
      f = {1, v[0], v[1], v[2]};
    }
    if (forms::disc_wide(f) == 0) throw parse_error("degenerate form", line_no);
    if (declared_disc && forms::disc(f) != *declared_disc)
      throw parse_error("declared discriminant does not match the form", line_no);
    if (!forms::is_irreducible(f)) throw parse_error("reducible form", line_no);
    canon.push_back(forms::reduce(forms::maximalize(f)));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<fields::CubicField> out;
  out.reserve(canon.size());
  for (const auto& f : canon) out.push_back(fields::make_field(f, /*validate=*/false));
  return fields::CubicFieldStore::from_fields(std::move(out), coverage_neg, coverage_pos);
}

namespace {

struct CacheKey {
  forms::Sign sign;
  i64 coverage;
  std::string base(const std::string& dir) const {
    return dir + "/cubics-" + (sign == forms::Sign::negative ? "neg" : "pos") + "-" +
           std::to_string(coverage) + "-v1";
  }
};

bool load_cached(const CacheKey& key, const std::string& dir,
                 std::vector<fields::CubicField>& sink) {
  std::string table = key.base(dir) + ".tsv";
  std::string manifest = table + ".manifest";
  std::ifstream mf(manifest);
  if (!mf) return false;
  std::string header;
  std::getline(mf, header);
  if (header != std::string(kHeaderV1) + " manifest") return false;
  std::string k;
  i64 records = -1, cov = -1;
  std::string sign_str;
  while (mf >> k) {
    if (k == "records")
      mf >> records;
    else if (k == "max_abs_disc")
      mf >> cov;
    else if (k == "sign")
      mf >> sign_str;
  }
  if (cov != key.coverage ||
      sign_str != (key.sign == forms::Sign::negative ? "-" : "+") || records < 0)
    return false;
  std::ifstream tf(table);
  if (!tf) return false;
  try {
    auto store = key.sign == forms::Sign::negative
                     ? parse_table(tf, key.coverage, 0)
                     : parse_table(tf, 0, key.coverage);
    if (static_cast<i64>(store.size()) != records) return false;
    for (const auto& e : store.all()) sink.push_back(e);
    return true;
  } catch (const std::exception&) {
    return false;  // stale or corrupt cache; regenerate
  }
}

void save_cache(const CacheKey& key, const std::string& dir,
                const fields::CubicFieldStore& store) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::string base = key.base(dir);
  std::string tmp_table = base + ".tsv.tmp";
  {
    std::ofstream tf(tmp_table, std::ios::binary);
    if (!tf) return;
    emit_table(store, tf);
  }
  fs::rename(tmp_table, base + ".tsv", ec);
  if (ec) return;
  std::string tmp_manifest = base + ".tsv.manifest.tmp";
  {
    std::ofstream mf(tmp_manifest, std::ios::binary);
    if (!mf) return;
    mf << kHeaderV1 << " manifest\n";
    mf << "sign " << (key.sign == forms::Sign::negative ? "-" : "+") << '\n';
    mf << "max_abs_disc " << key.coverage << '\n';
    mf << "records " << store.size() << '\n';
  }
  fs::rename(tmp_manifest, base + ".tsv.manifest", ec);
}

}  // namespace

fields::CubicFieldStore obtain_store(i64 coverage_neg, i64 coverage_pos, unsigned workers,
                                     const std::string& cache_dir) {
  std::vector<fields::CubicField> all;
  for (auto [sign, cov] : {std::pair{forms::Sign::negative, coverage_neg},
                           std::pair{forms::Sign::positive, coverage_pos}}) {
    if (cov <= 0) continue;
    CacheKey key{sign, cov};
    if (!cache_dir.empty() && load_cached(key, cache_dir, all)) continue;
    auto one = sign == forms::Sign::negative
                   ? fields::CubicFieldStore::from_enumeration(cov, 0, workers)
                   : fields::CubicFieldStore::from_enumeration(0, cov, workers);
    if (!cache_dir.empty()) save_cache(key, cache_dir, one);
    for (const auto& e : one.all()) all.push_back(e);
  }
  return fields::CubicFieldStore::from_fields(std::move(all), coverage_neg, coverage_pos);
}

}  // namespace cubicfields::tableio
