#include "fss/grade.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace fss {

Grade Grade::of(Rational value) {
    if (value < 0 || value > 1) {
        throw GradeRangeError("grade " + value.str() + " outside [0, 1]");
    }
    return Grade(std::move(value));
}

Grade Grade::ratio(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) {
        throw GradeRangeError("grade denominator must be positive");
    }
    return of(Rational(Integer(numerator), Integer(denominator)));
}

Grade Grade::parse(std::string_view text) {
    const auto all_digits = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                return false;
            }
        }
        return true;
    };

    std::string_view whole = text;
    std::string_view frac;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        whole = text.substr(0, dot);
        frac  = text.substr(dot + 1);
        if (!all_digits(frac)) {
            throw NotDecimalError("not a decimal numeral: \"" + std::string(text) + "\"");
        }
    }
    if (!all_digits(whole)) {
        throw NotDecimalError("not a decimal numeral: \"" + std::string(text) + "\"");
    }

    Integer numerator{std::string(whole)};
    Integer denominator(1);
    for (char c : frac) {
        numerator = numerator * 10 + (c - '0');
        denominator *= 10;
    }
    Rational value{numerator, denominator};
    if (value > 1) {
        throw GradeRangeError("grade " + std::string(text) + " outside [0, 1]");
    }
    return Grade(std::move(value));
}

std::strong_ordering Grade::operator<=>(const Grade& other) const {
    if (value_ < other.value_) {
        return std::strong_ordering::less;
    }
    if (value_ > other.value_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string decimal_string(const Rational& value) {
    if (value < 0) {
        throw GradeRangeError("decimal rendering expects a non-negative value");
    }
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);

    // A reduced fraction terminates exactly when the denominator is 2^a*5^b;
    // max(a, b) fractional digits are then both sufficient and necessary.
    Integer rest   = den;
    unsigned twos  = 0;
    unsigned fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) {
        throw NonTerminatingDecimalError("no finite decimal expansion for " + num.str() + "/" +
                                         den.str());
    }
    const unsigned digits = std::max(twos, fives);
    if (digits == 0) {
        return num.str();
    }
    const Integer scaled = num * boost::multiprecision::pow(Integer(10), digits) / den;
    std::string s = scaled.str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
    return s;
}

std::string Grade::decimal() const { return decimal_string(value_); }

Grade grade_max(const Grade& a, const Grade& b) { return a < b ? b : a; }

Grade grade_min(const Grade& a, const Grade& b) { return b < a ? b : a; }

Grade grade_complement(const Grade& a) { return Grade::of(Rational(1) - a.value()); }

Grade grade_product(const Grade& a, const Grade& b) {
    return Grade::of(a.value() * b.value());
}

Grade grade_sum(const Grade& a, const Grade& b) {
    return Grade::of(a.value() + b.value() - a.value() * b.value());
}

std::ostream& operator<<(std::ostream& os, const Grade& g) {
    try {
        return os << g.decimal();
    } catch (const NonTerminatingDecimalError&) {
        return os << g.value().str();
    }
}

} // namespace fss
