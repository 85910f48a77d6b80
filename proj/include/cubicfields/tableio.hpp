#pragma once

#include <iosfwd>
#include <string>

#include "cubicfields/fields.hpp"

namespace cubicfields::tableio {

inline constexpr const char* kHeaderV1 = "# cubicfields v1";

// Byte-exact v1 emission: header line, then one `disc\ta\tb\tc\td` record per
// field, LF-terminated, sorted by (|disc|, disc, a, b, c, d).
void emit_table(const fields::CubicFieldStore& store, std::ostream& os);

// Strict v1 parse; validates header, integer syntax, disc(form) = disc,
// canonicality, maximality, sort order and uniqueness. Throws parse_error with
// a 1-based line number. Coverage defaults to the largest |disc| present per
// sign; the explicit overload trusts the caller (e.g. a manifest).
fields::CubicFieldStore parse_table(std::istream& is);
fields::CubicFieldStore parse_table(std::istream& is, i64 coverage_neg, i64 coverage_pos);

enum class IngestKind { forms, polynomials };
enum class CoeffOrder { leading_first, constant_first };

// Whitespace-tolerant dialect for externally produced tables: blank lines and
// '#' comments skipped, forms as `a b c d` (optionally `disc a b c d`), monic
// polynomials as 3 or 4 coefficients in the configured order. Records are
// normalized through index stripping and reduction, deduplicated and sorted.
fields::CubicFieldStore ingest_loose(std::istream& is, IngestKind kind, CoeffOrder order,
                                     i64 coverage_neg, i64 coverage_pos);

// Store acquisition with optional on-disk caching. cache_dir empty = no
// caching; otherwise per-sign files keyed by (sign, coverage, v1) with a
// record-count manifest, written via create-then-rename.
fields::CubicFieldStore obtain_store(i64 coverage_neg, i64 coverage_pos, unsigned workers,
                                     const std::string& cache_dir);

}  // namespace cubicfields::tableio
