#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "semicov/covariety.hpp"
#include "semicov/frobenius_fixed.hpp"
#include "semicov/semigroup.hpp"

namespace semicov::io {

enum class Format { json, jsonl, csv, dot, plain };

/// Accepts json, jsonl, csv, dot, plain.  Throws Error on anything else.
Format parse_format(const std::string& name);

/// The interchange record as a compact JSON object, keys in this order:
/// frobenius, msg, gaps, multiplicity, genus, type.  The naturals get type 1,
/// following the convention that their only pseudo-Frobenius number is -1;
/// their msg is [1] and their gap list is empty.
std::string semigroup_record(const NumericalSemigroup& s);

/// Rebuilds a semigroup from a record.  The gap list alone determines the
/// semigroup; every other recognized key present is re-derived and must
/// match, unknown keys are ignored.  Throws Error on malformed or
/// inconsistent input.
NumericalSemigroup semigroup_from_record(const std::string& text);

/// Reads semigroups from JSON: a single record, an array of records, an
/// object with a "members" array, or one record per line with optional
/// {"F": ...} header and {"count": ...} trailer lines as produced by the
/// jsonl writers.  Throws Error.
std::vector<NumericalSemigroup> read_semigroups(std::istream& is);

/// Columns: frobenius, multiplicity, genus, type, embedding_dimension, rank,
/// msg, gaps.  The two list columns are semicolon-separated.  rank counts
/// the minimal generators not exceeding the Frobenius number.
std::string csv_header();
std::string csv_row(const NumericalSemigroup& s);

/// {"delta": record, "members": [records in canonical order],
///  "maximal": [indices into members]}, pretty-printed when indent >= 0.
std::string covariety_record(const Covariety& c, int indent = -1);

/// Streams the members of A(F) to os and returns their count.
///   jsonl: header {"F": F}, one record per line, trailer {"count": N}
///   json:  one object {"F": F, "members": [...], "count": N}
///   csv:   header row plus one row per member
///   plain: one element list per line, then the count
/// The dot format is not meaningful here and is rejected with Error.
std::uint64_t write_enumeration(std::ostream& os, int frobenius, Format format,
                                const EnumerateOptions& options = {});

/// Same envelope as write_enumeration for an explicit member list, with the
/// given value under the header key "F".
void write_members(std::ostream& os, int frobenius,
                   const std::vector<NumericalSemigroup>& members, Format format);

/// The tree of a covariety with vertices labeled by comma-joined gap lists
/// ("-" for the naturals) and one child -> parent edge per non-root member.
void write_tree_dot(std::ostream& os, const Covariety& c);

/// {"vertices": [[gaps]...], "root": index, "edges": [[child, parent]...]},
/// pretty-printed when indent >= 0.
std::string tree_record(const Covariety& c, int indent = -1);

}  // namespace semicov::io
