#include "fss/universe.hpp"

namespace fss {

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw Error("universe must contain at least one element");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i], i).second) {
            throw DuplicateLabelError("duplicate universe element \"" + elements_[i] + "\"");
        }
    }
}

UniversePtr Universe::make(std::vector<std::string> elements) {
    return std::make_shared<const Universe>(std::move(elements));
}

UniversePtr Universe::make(std::initializer_list<std::string> elements) {
    return make(std::vector<std::string>(elements));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Universe::same_elements(const Universe& other) const {
    if (size() != other.size()) {
        return false;
    }
    for (const auto& label : elements_) {
        if (!other.index_of(label)) {
            return false;
        }
    }
    return true;
}

} // namespace fss
