#include "fss/param_label.hpp"

#include <algorithm>
#include <ostream>

namespace fss {

ParamLabel::ParamLabel(std::string atom) : repr_(std::move(atom)) {}

ParamLabel ParamLabel::tuple(std::vector<ParamLabel> parts) {
    if (parts.size() < 2) {
        throw Error("a tuple label needs at least two parts");
    }
    ParamLabel label("");
    label.repr_ = std::make_shared<const std::vector<ParamLabel>>(std::move(parts));
    return label;
}

ParamLabel ParamLabel::pair(ParamLabel left, ParamLabel right) {
    std::vector<ParamLabel> parts;
    parts.reserve(2);
    parts.push_back(std::move(left));
    parts.push_back(std::move(right));
    return tuple(std::move(parts));
}

const std::string& ParamLabel::atom() const { return std::get<std::string>(repr_); }

std::span<const ParamLabel> ParamLabel::parts() const {
    return *std::get<std::shared_ptr<const std::vector<ParamLabel>>>(repr_);
}

std::vector<std::string> ParamLabel::flatten_atoms() const {
    std::vector<std::string> atoms;
    auto walk = [&](const ParamLabel& label, auto&& self) -> void {
        if (label.is_atom()) {
            atoms.push_back(label.atom());
            return;
        }
        for (const auto& part : label.parts()) {
            self(part, self);
        }
    };
    walk(*this, walk);
    return atoms;
}

ParamLabel ParamLabel::flattened() const {
    if (is_atom()) {
        return *this;
    }
    auto atoms = flatten_atoms();
    std::vector<ParamLabel> parts(atoms.begin(), atoms.end());
    return tuple(std::move(parts));
}

std::string ParamLabel::text() const {
    if (is_atom()) {
        return atom();
    }
    std::string out = "(";
    bool first = true;
    for (const auto& part : parts()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += part.text();
    }
    out += ')';
    return out;
}

bool ParamLabel::operator==(const ParamLabel& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering ParamLabel::operator<=>(const ParamLabel& other) const {
    if (is_atom() != other.is_atom()) {
        return is_atom() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (is_atom()) {
        return atom().compare(other.atom()) <=> 0;
    }
    const auto lhs = parts();
    const auto rhs = other.parts();
    return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::ostream& operator<<(std::ostream& os, const ParamLabel& label) { return os << label.text(); }

} // namespace fss
