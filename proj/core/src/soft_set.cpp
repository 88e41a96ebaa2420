#include "fss/soft_set.hpp"

#include <algorithm>
#include <ostream>

namespace fss {

namespace {

void require_same_universe(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    if (!f.universe()->same_elements(*g.universe())) {
        throw UniverseMismatchError("soft sets live over different universes");
    }
}

template <typename Op>
FuzzySoftSet product_op(const FuzzySoftSet& f, const FuzzySoftSet& g, Op op) {
    require_same_universe(f, g);
    std::vector<ParamLabel> params;
    std::vector<FuzzySet> images;
    params.reserve(f.param_count() * g.param_count());
    images.reserve(f.param_count() * g.param_count());
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        for (std::size_t j = 0; j < g.param_count(); ++j) {
            params.push_back(ParamLabel::pair(f.param(i), g.param(j)));
            images.push_back(op(f.image(i), g.image(j)));
        }
    }
    return FuzzySoftSet(f.universe(), std::move(params), std::move(images));
}

} // namespace

FuzzySoftSet::FuzzySoftSet(UniversePtr universe, std::vector<ParamLabel> params,
                           std::vector<FuzzySet> images)
    : universe_(std::move(universe)), params_(std::move(params)), images_(std::move(images)) {
    if (!universe_) {
        throw Error("soft set needs a universe");
    }
    if (images_.size() < params_.size()) {
        throw MissingImageError("parameter without an image: \"" +
                                params_[images_.size()].text() + "\"");
    }
    if (images_.size() > params_.size()) {
        throw Error("more images than parameters");
    }
    for (std::size_t i = 0; i < params_.size(); ++i) {
        for (std::size_t j = i + 1; j < params_.size(); ++j) {
            if (params_[i] == params_[j]) {
                throw DuplicateParamError("duplicate parameter \"" + params_[i].text() + "\"");
            }
        }
    }
    for (const auto& image : images_) {
        if (!(image.universe() == universe_ || *image.universe() == *universe_)) {
            throw UniverseMismatchError("image universe differs from the soft set universe");
        }
    }
}

FuzzySoftSet FuzzySoftSet::null_set(UniversePtr universe, std::vector<ParamLabel> params) {
    if (params.empty()) {
        throw EmptyParamsError("a null soft set needs at least one parameter");
    }
    std::vector<FuzzySet> images(params.size(), FuzzySet::empty(universe));
    return FuzzySoftSet(std::move(universe), std::move(params), std::move(images));
}

FuzzySoftSet FuzzySoftSet::absolute_set(UniversePtr universe, std::vector<ParamLabel> params) {
    if (params.empty()) {
        throw EmptyParamsError("an absolute soft set needs at least one parameter");
    }
    std::vector<FuzzySet> images(params.size(), FuzzySet::universal(universe));
    return FuzzySoftSet(std::move(universe), std::move(params), std::move(images));
}

FuzzySoftSet FuzzySoftSet::empty_set(UniversePtr universe) {
    return FuzzySoftSet(std::move(universe), {}, {});
}

const FuzzySet* FuzzySoftSet::find_image(const ParamLabel& label) const {
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (params_[i] == label) {
            return &images_[i];
        }
    }
    return nullptr;
}

bool FuzzySoftSet::is_null() const {
    if (params_.empty()) {
        return false;
    }
    return std::all_of(images_.begin(), images_.end(),
                       [](const FuzzySet& s) { return is_empty(s); });
}

bool FuzzySoftSet::is_absolute() const {
    if (params_.empty()) {
        return false;
    }
    return std::all_of(images_.begin(), images_.end(),
                       [](const FuzzySet& s) { return is_universal(s); });
}

Family::Family(std::vector<FuzzySet> members) {
    for (auto& candidate : members) {
        if (!contains(candidate)) {
            members_.push_back(std::move(candidate));
        }
    }
}

bool Family::contains(const FuzzySet& candidate) const {
    return std::any_of(members_.begin(), members_.end(),
                       [&](const FuzzySet& m) { return m == candidate; });
}

bool Family::operator==(const Family& other) const {
    if (size() != other.size()) {
        return false;
    }
    return std::all_of(members_.begin(), members_.end(),
                       [&](const FuzzySet& m) { return other.contains(m); });
}

Family tau(const FuzzySoftSet& f) { return Family(f.images()); }

Family min_family(const FuzzySoftSet& f) {
    const Family t = tau(f);
    std::vector<FuzzySet> out;
    for (const auto& c : t.members()) {
        if (is_empty(c)) {
            continue;
        }
        const bool dominated =
            std::any_of(t.members().begin(), t.members().end(), [&](const FuzzySet& d) {
                return !is_empty(d) && is_proper_subset(d, c);
            });
        if (!dominated) {
            out.push_back(c);
        }
    }
    return Family(std::move(out));
}

Family max_family(const FuzzySoftSet& f) {
    const Family t = tau(f);
    std::vector<FuzzySet> out;
    for (const auto& c : t.members()) {
        if (is_universal(c)) {
            continue;
        }
        const bool dominated =
            std::any_of(t.members().begin(), t.members().end(), [&](const FuzzySet& d) {
                return !is_universal(d) && is_proper_subset(c, d);
            });
        if (!dominated) {
            out.push_back(c);
        }
    }
    return Family(std::move(out));
}

bool are_equal(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    if (!f.universe()->same_elements(*g.universe())) {
        return false;
    }
    if (f.param_count() != g.param_count()) {
        return false;
    }
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        const FuzzySet* other = g.find_image(f.param(i));
        if (other == nullptr || !(f.image(i) == *other)) {
            return false;
        }
    }
    return true;
}

bool are_equivalent(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_same_universe(f, g);
    return tau(f) == tau(g);
}

bool internally_approximates(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_same_universe(f, g);
    for (const auto& target : g.images()) {
        if (is_empty(target)) {
            continue;
        }
        const bool witnessed =
            std::any_of(f.images().begin(), f.images().end(), [&](const FuzzySet& s) {
                return !is_empty(s) && is_subset(s, target);
            });
        if (!witnessed) {
            return false;
        }
    }
    return true;
}

bool externally_approximates(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_same_universe(f, g);
    for (const auto& target : g.images()) {
        if (is_universal(target)) {
            continue;
        }
        const bool witnessed =
            std::any_of(f.images().begin(), f.images().end(), [&](const FuzzySet& s) {
                return !is_universal(s) && is_subset(target, s);
            });
        if (!witnessed) {
            return false;
        }
    }
    return true;
}

bool strictly_internally_approximates(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return internally_approximates(f, g) && !internally_approximates(g, f);
}

bool strictly_externally_approximates(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return externally_approximates(f, g) && !externally_approximates(g, f);
}

bool internally_equivalent(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return internally_approximates(f, g) && internally_approximates(g, f);
}

bool externally_equivalent(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return externally_approximates(f, g) && externally_approximates(g, f);
}

bool weakly_equivalent(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return internally_equivalent(f, g) && externally_equivalent(f, g);
}

bool are_isomorphic(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    require_same_universe(f, g);
    if (f.param_count() != g.param_count()) {
        return false;
    }
    auto count = [](const FuzzySoftSet& h, const FuzzySet& value) {
        return std::count_if(h.images().begin(), h.images().end(),
                             [&](const FuzzySet& s) { return s == value; });
    };
    for (const auto& image : f.images()) {
        if (count(f, image) != count(g, image)) {
            return false;
        }
    }
    return true;
}

FuzzySoftSet complement(const FuzzySoftSet& f) {
    std::vector<FuzzySet> images;
    images.reserve(f.param_count());
    for (const auto& image : f.images()) {
        images.push_back(complement(image));
    }
    return FuzzySoftSet(f.universe(), f.params(), std::move(images));
}

FuzzySoftSet soft_union(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return product_op(f, g, fuzzy_union);
}

FuzzySoftSet soft_intersection(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return product_op(f, g, fuzzy_intersection);
}

FuzzySoftSet soft_product(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return product_op(f, g, algebraic_product);
}

FuzzySoftSet soft_sum(const FuzzySoftSet& f, const FuzzySoftSet& g) {
    return product_op(f, g, algebraic_sum);
}

FuzzySoftSet flatten_params(const FuzzySoftSet& f) {
    std::vector<ParamLabel> params;
    params.reserve(f.param_count());
    for (const auto& label : f.params()) {
        params.push_back(label.flattened());
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        for (std::size_t j = i + 1; j < params.size(); ++j) {
            if (params[i] == params[j]) {
                throw FlattenCollisionError("labels \"" + f.param(i).text() + "\" and \"" +
                                            f.param(j).text() + "\" flatten to \"" +
                                            params[i].text() + "\"");
            }
        }
    }
    return FuzzySoftSet(f.universe(), std::move(params), f.images());
}

std::ostream& operator<<(std::ostream& os, const FuzzySoftSet& f) {
    os << '{';
    for (std::size_t i = 0; i < f.param_count(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << f.param(i) << " -> " << f.image(i);
    }
    return os << '}';
}

} // namespace fss
