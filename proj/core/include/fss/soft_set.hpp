#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fss/fuzzy_set.hpp"
#include "fss/param_label.hpp"

namespace fss {

// Fuzzy soft set: a total mapping from a finite list of distinct parameter
// labels to fuzzy subsets of one universe.  The parameter list may be empty.
class FuzzySoftSet {
public:
    FuzzySoftSet(UniversePtr universe, std::vector<ParamLabel> params,
                 std::vector<FuzzySet> images);

    // Every image is the empty fuzzy set.  Needs at least one parameter.
    static FuzzySoftSet null_set(UniversePtr universe, std::vector<ParamLabel> params);

    // Every image is the whole universe.  Needs at least one parameter.
    static FuzzySoftSet absolute_set(UniversePtr universe, std::vector<ParamLabel> params);

    // No parameters at all.
    static FuzzySoftSet empty_set(UniversePtr universe);

    const UniversePtr& universe() const { return universe_; }
    const std::vector<ParamLabel>& params() const { return params_; }
    const std::vector<FuzzySet>& images() const { return images_; }
    std::size_t param_count() const { return params_.size(); }
    const ParamLabel& param(std::size_t i) const { return params_[i]; }
    const FuzzySet& image(std::size_t i) const { return images_[i]; }

    // Image attached to a structurally equal label, or null when absent.
    const FuzzySet* find_image(const ParamLabel& label) const;

    bool is_empty_soft_set() const { return params_.empty(); }
    bool is_null() const;     // some parameters, every image empty
    bool is_absolute() const; // some parameters, every image universal

private:
    UniversePtr universe_;
    std::vector<ParamLabel> params_;
    std::vector<FuzzySet> images_;
};

// Set of fuzzy sets over one universe, deduplicated, first occurrence first.
class Family {
public:
    Family() = default;
    explicit Family(std::vector<FuzzySet> members); // deduplicates

    const std::vector<FuzzySet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(const FuzzySet& candidate) const;

    // Set equality; member order is irrelevant.
    bool operator==(const Family& other) const;

private:
    std::vector<FuzzySet> members_;
};

// The distinct images of a soft set.  All relations below factor through it.
Family tau(const FuzzySoftSet& f);

// Inclusion-minimal members of tau excluding the empty fuzzy set, and
// inclusion-maximal members excluding the universal one.  Either family may
// be empty.
Family min_family(const FuzzySoftSet& f);
Family max_family(const FuzzySoftSet& f);

// Same universe, same parameter label set, same image per label.
bool are_equal(const FuzzySoftSet& f, const FuzzySoftSet& g);

// Equal tau families.
bool are_equivalent(const FuzzySoftSet& f, const FuzzySoftSet& g);

// f internally approximates g: every non-empty image of g admits a non-empty
// image of f inside it.  Vacuously true when g has no non-empty image.
bool internally_approximates(const FuzzySoftSet& f, const FuzzySoftSet& g);

// f externally approximates g: every non-universal image of g admits a
// non-universal image of f enclosing it.
bool externally_approximates(const FuzzySoftSet& f, const FuzzySoftSet& g);

// One direction holds and its reverse fails.
bool strictly_internally_approximates(const FuzzySoftSet& f, const FuzzySoftSet& g);
bool strictly_externally_approximates(const FuzzySoftSet& f, const FuzzySoftSet& g);

bool internally_equivalent(const FuzzySoftSet& f, const FuzzySoftSet& g);
bool externally_equivalent(const FuzzySoftSet& f, const FuzzySoftSet& g);
bool weakly_equivalent(const FuzzySoftSet& f, const FuzzySoftSet& g);

// Images agree as multisets; labels are ignored.
bool are_isomorphic(const FuzzySoftSet& f, const FuzzySoftSet& g);

FuzzySoftSet complement(const FuzzySoftSet& f);

// Product-style binary operations: the result is indexed by all label pairs
// (a, b), the first operand's parameters outermost, and the image at (a, b)
// combines image(a) with image(b) pointwise.
FuzzySoftSet soft_union(const FuzzySoftSet& f, const FuzzySoftSet& g);
FuzzySoftSet soft_intersection(const FuzzySoftSet& f, const FuzzySoftSet& g);
FuzzySoftSet soft_product(const FuzzySoftSet& f, const FuzzySoftSet& g);
FuzzySoftSet soft_sum(const FuzzySoftSet& f, const FuzzySoftSet& g);

// Rewrites every tuple label to the flat tuple of its atoms.
FuzzySoftSet flatten_params(const FuzzySoftSet& f);

std::ostream& operator<<(std::ostream& os, const FuzzySoftSet& f);

} // namespace fss
