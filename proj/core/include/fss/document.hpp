#pragma once

#include <string>
#include <string_view>

#include "fss/decision.hpp"
#include "fss/laws.hpp"
#include "fss/soft_matrix.hpp"
#include "fss/soft_set.hpp"

namespace fss {

// Soft set documents are JSON objects with three keys:
//
//   universe    array of element labels, in row order
//   parameters  array of labels; a string is atomic, an array of two or
//               more labels is a tuple
//   grades      one array per universe element, one decimal numeral per
//               parameter
//
// Grades travel as strings so values survive the trip exactly.
FuzzySoftSet parse_soft_set_document(std::string_view text);
std::string serialize_soft_set_document(const FuzzySoftSet& f);

// Family fragment: the universe plus one element-to-grade object per member.
std::string serialize_family_document(const Family& family, const UniversePtr& universe);

// CSV matrix form: a header row of parameter labels behind an empty corner
// cell, then one row per element, led by its label.  Tuple labels render in
// their canonical "(a,b)" form, so atomic labels used with the CSV format
// must avoid parentheses and commas; cells are quoted RFC 4180 style when
// needed.
SoftMatrix parse_matrix_csv(std::string_view text);
std::string serialize_matrix_csv(const SoftMatrix& m);

std::string serialize_law_report(const LawReport& report);
std::string serialize_decision_report(const DecisionReport& report);

// Fixed-width human-readable rendering of a decision report.
std::string decision_table(const DecisionReport& report);

} // namespace fss
