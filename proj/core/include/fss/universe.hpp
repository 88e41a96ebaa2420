#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fss/errors.hpp"

namespace fss {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

// Finite, ordered collection of distinct element labels.  The order is fixed
// at construction; it drives matrix rows and serialized output but carries no
// set-theoretic meaning.
class Universe {
public:
    explicit Universe(std::vector<std::string> elements);

    static UniversePtr make(std::vector<std::string> elements);
    static UniversePtr make(std::initializer_list<std::string> elements);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    // Same labels in the same order.
    bool operator==(const Universe& other) const { return elements_ == other.elements_; }

    // Same labels regardless of order.
    bool same_elements(const Universe& other) const;

private:
    std::vector<std::string> elements_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

} // namespace fss
