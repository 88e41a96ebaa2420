#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fss/grade.hpp"
#include "fss/universe.hpp"

namespace fss {

// Fuzzy subset of a universe: one grade per element, stored in universe
// order.  Values are immutable once built.
//
// Two fuzzy sets are comparable whenever their universes carry the same
// element labels; the label-to-grade mapping is what counts, so element
// order never affects equality or the pointwise operations.
class FuzzySet {
public:
    FuzzySet(UniversePtr universe, std::vector<Grade> grades);

    static FuzzySet empty(UniversePtr universe);     // all grades 0
    static FuzzySet universal(UniversePtr universe); // all grades 1

    // Sparse construction: listed elements get the parsed grade, absent
    // elements get zero.
    static FuzzySet
    sparse(UniversePtr universe,
           std::initializer_list<std::pair<std::string_view, std::string_view>> grades);
    static FuzzySet
    sparse(UniversePtr universe,
           const std::vector<std::pair<std::string, std::string>>& grades);

    const UniversePtr& universe() const { return universe_; }
    const std::vector<Grade>& grades() const { return grades_; }
    const Grade& grade(std::size_t i) const { return grades_[i]; }
    const Grade& grade_for(std::string_view element) const;

    bool operator==(const FuzzySet& other) const;

private:
    UniversePtr universe_;
    std::vector<Grade> grades_;
};

bool is_empty(const FuzzySet& a);
bool is_universal(const FuzzySet& a);

// Zadeh inclusion: a(x) <= b(x) for every element.
bool is_subset(const FuzzySet& a, const FuzzySet& b);
bool is_proper_subset(const FuzzySet& a, const FuzzySet& b);

FuzzySet complement(const FuzzySet& a);
FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b);        // max
FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b); // min
FuzzySet algebraic_product(const FuzzySet& a, const FuzzySet& b);  // a*b
FuzzySet algebraic_sum(const FuzzySet& a, const FuzzySet& b);      // a+b-a*b

// Compact rendering such as "{a/0.5, c/0.3}"; zero grades are omitted and
// the empty set prints as "{}".
std::string to_text(const FuzzySet& a);
std::ostream& operator<<(std::ostream& os, const FuzzySet& a);

} // namespace fss
