#include "fss/fuzzy_set.hpp"

#include <ostream>
#include <sstream>

namespace fss {

namespace {

bool same_ordered_universe(const FuzzySet& a, const FuzzySet& b) {
    return a.universe() == b.universe() || *a.universe() == *b.universe();
}

// Grades of b permuted into a's element order.  Requires equal element sets.
std::vector<Grade> grades_in_order_of(const FuzzySet& a, const FuzzySet& b) {
    if (!a.universe()->same_elements(*b.universe())) {
        throw UniverseMismatchError("fuzzy sets live over different universes");
    }
    std::vector<Grade> out;
    out.reserve(a.universe()->size());
    for (const auto& label : a.universe()->elements()) {
        out.push_back(b.grade(*b.universe()->index_of(label)));
    }
    return out;
}

template <typename Op>
FuzzySet pointwise(const FuzzySet& a, const FuzzySet& b, Op op) {
    std::vector<Grade> out;
    out.reserve(a.grades().size());
    if (same_ordered_universe(a, b)) {
        for (std::size_t i = 0; i < a.grades().size(); ++i) {
            out.push_back(op(a.grade(i), b.grade(i)));
        }
    } else {
        const auto aligned = grades_in_order_of(a, b);
        for (std::size_t i = 0; i < a.grades().size(); ++i) {
            out.push_back(op(a.grade(i), aligned[i]));
        }
    }
    return FuzzySet(a.universe(), std::move(out));
}

template <typename Cmp>
bool pointwise_all(const FuzzySet& a, const FuzzySet& b, Cmp cmp) {
    if (same_ordered_universe(a, b)) {
        for (std::size_t i = 0; i < a.grades().size(); ++i) {
            if (!cmp(a.grade(i), b.grade(i))) {
                return false;
            }
        }
        return true;
    }
    const auto aligned = grades_in_order_of(a, b);
    for (std::size_t i = 0; i < a.grades().size(); ++i) {
        if (!cmp(a.grade(i), aligned[i])) {
            return false;
        }
    }
    return true;
}

} // namespace

FuzzySet::FuzzySet(UniversePtr universe, std::vector<Grade> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (!universe_) {
        throw Error("fuzzy set needs a universe");
    }
    if (grades_.size() != universe_->size()) {
        throw LengthMismatchError("expected " + std::to_string(universe_->size()) +
                                  " grades, got " + std::to_string(grades_.size()));
    }
}

FuzzySet FuzzySet::empty(UniversePtr universe) {
    std::vector<Grade> grades(universe->size(), Grade::zero());
    return FuzzySet(std::move(universe), std::move(grades));
}

FuzzySet FuzzySet::universal(UniversePtr universe) {
    std::vector<Grade> grades(universe->size(), Grade::one());
    return FuzzySet(std::move(universe), std::move(grades));
}

FuzzySet FuzzySet::sparse(UniversePtr universe,
                          const std::vector<std::pair<std::string, std::string>>& grades) {
    std::vector<Grade> out(universe->size(), Grade::zero());
    std::vector<bool> seen(universe->size(), false);
    for (const auto& [label, text] : grades) {
        auto idx = universe->index_of(label);
        if (!idx) {
            throw Error("element \"" + label + "\" is not in the universe");
        }
        if (seen[*idx]) {
            throw DuplicateLabelError("element \"" + label + "\" listed twice");
        }
        seen[*idx] = true;
        out[*idx] = Grade::parse(text);
    }
    return FuzzySet(std::move(universe), std::move(out));
}

FuzzySet FuzzySet::sparse(
    UniversePtr universe,
    std::initializer_list<std::pair<std::string_view, std::string_view>> grades) {
    std::vector<std::pair<std::string, std::string>> list;
    list.reserve(grades.size());
    for (const auto& [label, text] : grades) {
        list.emplace_back(std::string(label), std::string(text));
    }
    return sparse(std::move(universe), list);
}

const Grade& FuzzySet::grade_for(std::string_view element) const {
    auto idx = universe_->index_of(element);
    if (!idx) {
        throw Error("element \"" + std::string(element) + "\" is not in the universe");
    }
    return grades_[*idx];
}

bool FuzzySet::operator==(const FuzzySet& other) const {
    if (same_ordered_universe(*this, other)) {
        return grades_ == other.grades_;
    }
    if (!universe_->same_elements(*other.universe())) {
        return false;
    }
    return grades_in_order_of(*this, other) == grades_;
}

bool is_empty(const FuzzySet& a) {
    for (const auto& g : a.grades()) {
        if (!(g == Grade::zero())) {
            return false;
        }
    }
    return true;
}

bool is_universal(const FuzzySet& a) {
    for (const auto& g : a.grades()) {
        if (!(g == Grade::one())) {
            return false;
        }
    }
    return true;
}

bool is_subset(const FuzzySet& a, const FuzzySet& b) {
    return pointwise_all(a, b, [](const Grade& x, const Grade& y) { return x <= y; });
}

bool is_proper_subset(const FuzzySet& a, const FuzzySet& b) {
    return is_subset(a, b) && !(a == b);
}

FuzzySet complement(const FuzzySet& a) {
    std::vector<Grade> out;
    out.reserve(a.grades().size());
    for (const auto& g : a.grades()) {
        out.push_back(grade_complement(g));
    }
    return FuzzySet(a.universe(), std::move(out));
}

FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b) { return pointwise(a, b, grade_max); }

FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b) {
    return pointwise(a, b, grade_min);
}

FuzzySet algebraic_product(const FuzzySet& a, const FuzzySet& b) {
    return pointwise(a, b, grade_product);
}

FuzzySet algebraic_sum(const FuzzySet& a, const FuzzySet& b) {
    return pointwise(a, b, grade_sum);
}

std::string to_text(const FuzzySet& a) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t i = 0; i < a.universe()->size(); ++i) {
        if (a.grade(i) == Grade::zero()) {
            continue;
        }
        if (!first) {
            os << ", ";
        }
        first = false;
        os << a.universe()->element(i) << '/' << a.grade(i);
    }
    os << '}';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FuzzySet& a) { return os << to_text(a); }

} // namespace fss
