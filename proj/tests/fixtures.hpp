#pragma once

// Shared concrete instances used across the test suites.  Values are small
// enough to verify by hand; several appear in multiple suites, so they live
// here under names describing what each instance exercises.

#include "fss/decision.hpp"
#include "fss/soft_matrix.hpp"
#include "fss/soft_set.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using fss::FuzzySet;
using fss::FuzzySoftSet;
using fss::ParamLabel;
using fss::Universe;
using fss::UniversePtr;

inline UniversePtr uabc() { return Universe::make({"a", "b", "c"}); }
inline UniversePtr uxyz() { return Universe::make({"x", "y", "z"}); }

using Sparse = std::vector<std::pair<std::string, std::string>>;

inline FuzzySoftSet build(UniversePtr u, std::vector<ParamLabel> params,
                          const std::vector<Sparse>& images) {
    std::vector<FuzzySet> sets;
    sets.reserve(images.size());
    for (const auto& image : images) {
        sets.push_back(FuzzySet::sparse(u, image));
    }
    return FuzzySoftSet(std::move(u), std::move(params), std::move(sets));
}

// Three-parameter soft set whose tau has three distinct singleton-support
// members; the base instance for equality and equivalence checks.
inline FuzzySoftSet base_sample() {
    return build(uabc(), {"x", "y", "z"},
                 {{{"b", "0.3"}, {"c", "0.7"}}, {{"c", "0.1"}}, {{"a", "0.5"}}});
}

// Same tau family as base_sample under different labels and image order.
inline FuzzySoftSet relabeled_sample() {
    return build(uabc(), {"m", "n", "o"},
                 {{{"b", "0.3"}, {"c", "0.7"}}, {{"a", "0.5"}}, {{"c", "0.1"}}});
}

// Target approximated by base_sample internally and externally, strictly in
// both senses.
inline FuzzySoftSet approximation_target() {
    return build(uabc(), {"m", "n", "o"}, {{{"a", "0.5"}}, {{"c", "0.2"}}, {{"c", "0.4"}}});
}

// Mutually internally approximating pair that is not externally equivalent.
inline std::pair<FuzzySoftSet, FuzzySoftSet> internal_equivalence_pair() {
    auto f = build(uabc(), {"x", "y", "z"},
                   {{{"a", "0.2"}}, {{"a", "0.4"}}, {{"a", "0.4"}, {"b", "0.5"}}});
    auto g = build(uabc(), {"m", "n"}, {{{"a", "0.3"}, {"b", "0.5"}}, {{"a", "0.2"}}});
    return {f, g};
}

// Mutually externally approximating pair.
inline std::pair<FuzzySoftSet, FuzzySoftSet> external_equivalence_pair() {
    auto f = build(uabc(), {"x", "y", "z"},
                   {{{"a", "0.4"}},
                    {{"a", "0.5"}, {"b", "0.2"}, {"c", "0.3"}},
                    {{"a", "0.4"}, {"b", "0.2"}}});
    auto g = build(uabc(), {"m", "n", "o"},
                   {{{"a", "0.3"}},
                    {{"a", "0.5"}, {"b", "0.2"}, {"c", "0.3"}},
                    {{"b", "0.1"}, {"c", "0.2"}}});
    return {f, g};
}

// Weakly equivalent pair over a four-element universe.
inline std::pair<FuzzySoftSet, FuzzySoftSet> weak_equivalence_pair() {
    auto u = Universe::make({"a", "b", "c", "d"});
    auto f = build(u, {"x", "y", "z"},
                   {{{"a", "0.4"}},
                    {{"a", "0.5"}, {"b", "0.2"}, {"c", "0.3"}},
                    {{"a", "0.4"}, {"b", "0.2"}}});
    auto g = build(u, {"m", "n", "o"},
                   {{{"a", "0.4"}},
                    {{"a", "0.5"}, {"b", "0.2"}, {"c", "0.3"}},
                    {{"a", "0.4"}, {"c", "0.2"}}});
    return {f, g};
}

// tau is a chain below two incomparable tops: the min family is one
// singleton, the max family the two tops.
inline FuzzySoftSet extremal_sample() {
    return build(uabc(), {"x", "y", "z"},
                 {{{"a", "0.5"}},
                  {{"a", "0.6"}, {"b", "0.2"}, {"c", "0.3"}},
                  {{"a", "0.7"}, {"b", "0.2"}}});
}

// Two-parameter instance whose complement has a known closed form.
inline FuzzySoftSet complement_sample() {
    return build(uxyz(), {"a", "b"}, {{{"x", "0.2"}, {"z", "0.8"}}, {{"x", "0.7"}, {"y", "1"}}});
}

// Operand pair with worked union and intersection values.
inline std::pair<FuzzySoftSet, FuzzySoftSet> product_op_pair() {
    auto f = build(uabc(), {"x", "y"}, {{{"a", "0.4"}, {"b", "0.8"}}, {{"c", "0.7"}}});
    auto g = build(uabc(), {"p", "q"}, {{{"b", "0.3"}, {"c", "0.5"}}, {{"a", "0.6"}, {"c", "1"}}});
    return {f, g};
}

// Singleton-image pair on which each forward extremal implication holds
// while all four converse implications fail.
inline std::pair<FuzzySoftSet, FuzzySoftSet> converse_failure_pair() {
    auto f = build(uabc(), {"x", "y", "z"}, {{{"a", "0.5"}}, {{"b", "0.4"}}, {{"c", "0.3"}}});
    auto g = build(uabc(), {"p", "q", "r"}, {{{"b", "0.5"}}, {{"a", "0.4"}}, {{"c", "0.3"}}});
    return {f, g};
}

// Pair on which the forward union/max implication itself fails: the union of
// two dominated images reproduces the pointwise top of both families, so the
// combined image is maximal while neither operand image is.
inline std::pair<FuzzySoftSet, FuzzySoftSet> masking_pair() {
    auto u = Universe::make({"x", "y"});
    auto f = build(u, {"a1", "a2"}, {{{"x", "0.9"}, {"y", "0.1"}}, {{"x", "0.9"}, {"y", "0.2"}}});
    auto g = build(u, {"b1", "b2"}, {{{"x", "0.5"}, {"y", "0.8"}}, {{"x", "0.6"}, {"y", "0.8"}}});
    return {f, g};
}

// --- matrices ---------------------------------------------------------

inline fss::SoftMatrix equality_matrix(std::vector<ParamLabel> cols) {
    return fss::SoftMatrix::from_decimal_rows({"x", "y", "z"}, std::move(cols),
                                              {{"0.2", "0.7"}, {"1", "0.5"}, {"0.5", "0"}});
}

// Three columns, the outer two equal; its column set matches
// equality_matrix's under any column labels.
inline fss::SoftMatrix equivalent_wide_matrix() {
    return fss::SoftMatrix::from_decimal_rows(
        {"x", "y", "z"}, {"p", "q", "r"},
        {{"0.7", "0.2", "0.7"}, {"0.5", "1", "0.5"}, {"0", "0.5", "0"}});
}

inline fss::SoftMatrix complement_input_matrix() {
    return fss::SoftMatrix::from_decimal_rows(
        {"a", "b", "c"}, {"x", "y", "z"},
        {{"0.4", "0.5", "0.4"}, {"0", "0.2", "0.2"}, {"0", "0.3", "0"}});
}

inline fss::SoftMatrix complement_output_matrix() {
    return fss::SoftMatrix::from_decimal_rows(
        {"a", "b", "c"}, {"x", "y", "z"},
        {{"0.6", "0.5", "0.6"}, {"1", "0.8", "0.8"}, {"1", "0.7", "1"}});
}

// Operands of the worked 3x6 intersection and union grids.
inline fss::SoftMatrix combine_left_matrix() {
    return fss::SoftMatrix::from_decimal_rows(
        {"x1", "x2", "x3"}, {"a1", "a2", "a3"},
        {{"0.6", "0.5", "0.6"}, {"0.1", "0.1", "0.7"}, {"0.4", "0", "1"}});
}

inline fss::SoftMatrix combine_right_matrix() {
    return fss::SoftMatrix::from_decimal_rows({"x1", "x2", "x3"}, {"b1", "b2"},
                                              {{"0.3", "0.5"}, {"0", "0.6"}, {"0.4", "0.8"}});
}

inline std::vector<ParamLabel> combined_labels() {
    return {ParamLabel::pair("a1", "b1"), ParamLabel::pair("a1", "b2"),
            ParamLabel::pair("a2", "b1"), ParamLabel::pair("a2", "b2"),
            ParamLabel::pair("a3", "b1"), ParamLabel::pair("a3", "b2")};
}

inline fss::SoftMatrix intersection_result_matrix() {
    return fss::SoftMatrix::from_decimal_rows(
        {"x1", "x2", "x3"}, combined_labels(),
        {{"0.3", "0.5", "0.3", "0.5", "0.3", "0.5"},
         {"0", "0.1", "0", "0.1", "0", "0.6"},
         {"0.4", "0.4", "0", "0", "0.4", "0.8"}});
}

inline fss::SoftMatrix union_result_matrix() {
    return fss::SoftMatrix::from_decimal_rows(
        {"x1", "x2", "x3"}, combined_labels(),
        {{"0.6", "0.6", "0.5", "0.5", "0.6", "0.6"},
         {"0.1", "0.6", "0.1", "0.6", "0.7", "0.7"},
         {"0.4", "0.8", "0.4", "0.8", "1", "1"}});
}

// --- decision ---------------------------------------------------------

// Two grade sheets over criteria {x, y, z} for candidates {a, b, c}; the
// aggregate diagonal makes candidate a dominate the other two.
inline FuzzySoftSet panel_sheet_one() {
    return build(uxyz(), {"a", "b", "c"},
                 {{{"x", "0.9"}, {"y", "0.8"}, {"z", "0.8"}},
                  {{"x", "0.7"}, {"y", "0.6"}, {"z", "0.4"}},
                  {{"x", "0.6"}, {"y", "0.4"}, {"z", "0.9"}}});
}

inline FuzzySoftSet panel_sheet_two() {
    return build(uxyz(), {"a", "b", "c"},
                 {{{"x", "0.7"}, {"y", "0.8"}, {"z", "0.9"}},
                  {{"x", "0.8"}, {"y", "0.5"}, {"z", "0.7"}},
                  {{"x", "0.7"}, {"y", "0.5"}, {"z", "0.8"}}});
}

inline fss::Panel sample_panel() {
    return fss::Panel{{{"one", panel_sheet_one()}, {"two", panel_sheet_two()}}};
}

inline FuzzySet diagonal_a() {
    return FuzzySet::sparse(uxyz(), {{"x", "0.7"}, {"y", "0.8"}, {"z", "0.8"}});
}
inline FuzzySet diagonal_b() {
    return FuzzySet::sparse(uxyz(), {{"x", "0.7"}, {"y", "0.5"}, {"z", "0.4"}});
}
inline FuzzySet diagonal_c() {
    return FuzzySet::sparse(uxyz(), {{"x", "0.6"}, {"y", "0.4"}, {"z", "0.8"}});
}

} // namespace fixtures
