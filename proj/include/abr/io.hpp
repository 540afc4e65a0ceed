#pragma once

#include <string>
#include <string_view>

#include "abr/coloring_table.hpp"
#include "abr/constructions.hpp"
#include "abr/ordered_colorings.hpp"
#include "abr/sequence.hpp"

namespace abr {

// Sequence files:
//   {"kind": "planar", "points": [["t", "h"], ...]}
//   {"kind": "lifted", "dimension": d, "points": [["z_1", ..., "z_{d-1}", "h"], ...]}
// Every number is a rational string "p/q" or "p". Fields may come in any
// order; unknown fields are rejected.

/// Throws ParseError (with line and column) on malformed JSON or schema
/// mismatch, InvariantError on non-increasing t or ragged points.
AnySequence parse_sequence(std::string_view text);

/// Canonical form: fixed field order, one point per line, "p/q" numbers.
std::string serialize_sequence(const AnySequence& s);
std::string serialize_sequence(const PlanarSequence& s);
std::string serialize_sequence(const LiftedSequence& s);

// Coloring table files. CSV: header "i0,...,i{r-1},color", then one row per
// increasing tuple in lexicographic order with colors '+' / '-'. JSON:
// {"n": n, "r": r, "colors": "+-..."} with the same lexicographic order.

std::string table_to_csv(const ColoringTable& c);
std::string table_to_json(const ColoringTable& c);

/// Accepts either format, detected by a leading '{'. Throws ParseError on
/// malformed text, and when rows are missing, repeated or out of order.
ColoringTable parse_table(std::string_view text);

std::string search_result_to_json(const SearchResult& r);
std::string em_report_to_json(const EmReport& report, const EmParams& params);
/// Same report for a sequence of unknown origin: "params" is null.
std::string em_report_to_json(const EmReport& report);

}  // namespace abr
