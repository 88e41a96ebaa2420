#include "doctest.h"

#include "fss/grade.hpp"

#include <sstream>

using fss::Grade;
using fss::Rational;

TEST_CASE("decimal numerals parse to exact rationals") {
    CHECK(Grade::parse("0.5").value() == Rational(1, 2));
    CHECK(Grade::parse("0.3").value() == Rational(3, 10));
    CHECK(Grade::parse("1").value() == 1);
    CHECK(Grade::parse("0").value() == 0);
    CHECK(Grade::parse("1.0").value() == 1);
    CHECK(Grade::parse("0.50") == Grade::parse("0.5"));
    CHECK(Grade::parse("0.125").value() == Rational(1, 8));
    // Exactness beyond double precision.
    CHECK(Grade::parse("0.1000000000000000001").value() ==
          Rational(fss::Integer("1000000000000000001"), fss::Integer("10000000000000000000")));
}

TEST_CASE("parse rejects junk and out-of-range values") {
    CHECK_THROWS_AS(Grade::parse(""), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("."), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse(".5"), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("5."), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("-0.1"), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("+0.1"), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("0.1.2"), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("0x1"), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("1e-1"), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("abc"), fss::NotDecimalError);
    CHECK_THROWS_AS(Grade::parse("1.2"), fss::GradeRangeError);
    CHECK_THROWS_AS(Grade::parse("2"), fss::GradeRangeError);
}

TEST_CASE("of and ratio validate the unit interval") {
    CHECK(Grade::of(Rational(1, 4)).decimal() == "0.25");
    CHECK_THROWS_AS(Grade::of(Rational(-1, 4)), fss::GradeRangeError);
    CHECK_THROWS_AS(Grade::of(Rational(5, 4)), fss::GradeRangeError);
    CHECK(Grade::ratio(1, 3).value() == Rational(1, 3));
    CHECK_THROWS_AS(Grade::ratio(4, 3), fss::GradeRangeError);
    CHECK_THROWS_AS(Grade::ratio(1, 0), fss::GradeRangeError);
    CHECK(Grade::zero().value() == 0);
    CHECK(Grade::one().value() == 1);
}

TEST_CASE("decimal emits the shortest terminating expansion") {
    CHECK(Grade::zero().decimal() == "0");
    CHECK(Grade::one().decimal() == "1");
    CHECK(Grade::ratio(1, 2).decimal() == "0.5");
    CHECK(Grade::ratio(3, 4).decimal() == "0.75");
    CHECK(Grade::ratio(7, 50).decimal() == "0.14");
    CHECK(Grade::ratio(1, 5).decimal() == "0.2");
    CHECK(Grade::ratio(1, 1024).decimal() == "0.0009765625");
    CHECK(Grade::parse("0.50").decimal() == "0.5"); // trailing zeros never come back
    CHECK_THROWS_AS(Grade::ratio(1, 3).decimal(), fss::NonTerminatingDecimalError);
    CHECK_THROWS_AS(Grade::ratio(1, 6).decimal(), fss::NonTerminatingDecimalError);
    CHECK_THROWS_AS(Grade::ratio(1, 7).decimal(), fss::NonTerminatingDecimalError);
}

TEST_CASE("decimal round-trips every terminating grade") {
    for (std::uint64_t den : {1ull, 2ull, 4ull, 5ull, 8ull, 10ull, 16ull, 20ull, 40ull, 1000ull}) {
        for (std::uint64_t num = 0; num <= den; ++num) {
            auto g = Grade::ratio(num, den);
            CHECK(Grade::parse(g.decimal()) == g);
        }
    }
}

TEST_CASE("the five grade connectives are exact") {
    auto a = Grade::parse("0.4");
    auto b = Grade::parse("0.5");
    CHECK(fss::grade_max(a, b) == b);
    CHECK(fss::grade_min(a, b) == a);
    CHECK(fss::grade_complement(a) == Grade::parse("0.6"));
    CHECK(fss::grade_product(a, b) == Grade::parse("0.2"));
    CHECK(fss::grade_sum(a, b) == Grade::parse("0.7")); // 0.4 + 0.5 - 0.2

    CHECK(fss::grade_complement(Grade::zero()) == Grade::one());
    CHECK(fss::grade_sum(Grade::one(), Grade::one()) == Grade::one());
    CHECK(fss::grade_product(Grade::one(), a) == a);
    CHECK(fss::grade_sum(Grade::zero(), a) == a);

    // Connectives stay inside the unit interval at the extremes.
    for (const auto& x : {Grade::zero(), Grade::parse("0.5"), Grade::one()}) {
        for (const auto& y : {Grade::zero(), Grade::parse("0.5"), Grade::one()}) {
            auto s = fss::grade_sum(x, y).value();
            auto p = fss::grade_product(x, y).value();
            CHECK(s >= 0);
            CHECK(s <= 1);
            CHECK(p >= 0);
            CHECK(p <= 1);
        }
    }
}

TEST_CASE("grades are totally ordered") {
    auto zero = Grade::zero();
    auto third = Grade::ratio(1, 3);
    auto half = Grade::parse("0.5");
    auto one = Grade::one();
    CHECK(zero < third);
    CHECK(third < half);
    CHECK(half < one);
    CHECK(half == Grade::ratio(2, 4));
    CHECK((half <=> Grade::ratio(1, 2)) == std::strong_ordering::equal);
}

TEST_CASE("streaming falls back to the fraction form") {
    std::ostringstream out;
    out << Grade::parse("0.25") << " " << Grade::ratio(1, 3);
    CHECK(out.str() == "0.25 1/3");
}

TEST_CASE("decimal_string rejects negatives and non-terminating rationals") {
    CHECK(fss::decimal_string(Rational(5, 4)) == "1.25"); // values above 1 are fine here
    CHECK_THROWS_AS(fss::decimal_string(Rational(-1, 2)), fss::GradeRangeError);
    CHECK_THROWS_AS(fss::decimal_string(Rational(1, 3)), fss::NonTerminatingDecimalError);
}
