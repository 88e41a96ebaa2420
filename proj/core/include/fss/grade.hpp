#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fss/errors.hpp"

namespace fss {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Membership grade: an exact rational confined to [0, 1].
//
// Grades enter the system as decimal numerals and leave it the same way, so
// every value seen in practice has a reduced denominator of the form 2^a*5^b.
// All arithmetic in between is exact; nothing is ever rounded.
class Grade {
public:
    Grade() = default; // zero

    // value must lie in [0, 1].
    static Grade of(Rational value);

    // Accepts "digits" or "digits.digits", nothing else.
    static Grade parse(std::string_view text);

    static Grade zero() { return Grade{}; }
    static Grade one() { return of(Rational(1)); }
    static Grade ratio(std::uint64_t numerator, std::uint64_t denominator);

    const Rational& value() const { return value_; }

    // Shortest decimal numeral equal to the grade.  Throws
    // NonTerminatingDecimalError when no finite expansion exists.
    std::string decimal() const;

    bool operator==(const Grade& other) const { return value_ == other.value_; }
    std::strong_ordering operator<=>(const Grade& other) const;

private:
    explicit Grade(Rational value) : value_(std::move(value)) {}

    Rational value_;
};

Grade grade_max(const Grade& a, const Grade& b);
Grade grade_min(const Grade& a, const Grade& b);
Grade grade_complement(const Grade& a);              // 1 - a
Grade grade_product(const Grade& a, const Grade& b); // a * b
Grade grade_sum(const Grade& a, const Grade& b);     // a + b - a * b

// Shortest decimal numeral for any non-negative rational whose reduced
// denominator divides some power of ten.  Used for grades and grade sums.
std::string decimal_string(const Rational& value);

// Prints the decimal form, falling back to "p/q" for non-terminating values.
std::ostream& operator<<(std::ostream& os, const Grade& g);

} // namespace fss
