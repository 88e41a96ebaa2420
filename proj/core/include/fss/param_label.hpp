#pragma once

#include <compare>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fss/errors.hpp"

namespace fss {

// Parameter label: an atomic name, or an ordered tuple of labels.  Product
// operations build binary tuples; flattening produces wider ones.  Labels
// are immutable and compare structurally.
class ParamLabel {
public:
    ParamLabel(std::string atom);
    ParamLabel(std::string_view atom) : ParamLabel(std::string(atom)) {}
    ParamLabel(const char* atom) : ParamLabel(std::string(atom)) {}

    static ParamLabel tuple(std::vector<ParamLabel> parts); // needs >= 2 parts
    static ParamLabel pair(ParamLabel left, ParamLabel right);

    bool is_atom() const { return std::holds_alternative<std::string>(repr_); }
    const std::string& atom() const; // atoms only
    std::span<const ParamLabel> parts() const; // tuples only

    // Atomic constituents, left to right.
    std::vector<std::string> flatten_atoms() const;

    // Atoms stay as they are; a tuple becomes one flat tuple of its atoms.
    ParamLabel flattened() const;

    // Canonical rendering: atoms verbatim, tuples as "(a,b)" recursively.
    std::string text() const;

    bool operator==(const ParamLabel& other) const;
    std::strong_ordering operator<=>(const ParamLabel& other) const;

private:
    std::variant<std::string, std::shared_ptr<const std::vector<ParamLabel>>> repr_;
};

std::ostream& operator<<(std::ostream& os, const ParamLabel& label);

} // namespace fss
